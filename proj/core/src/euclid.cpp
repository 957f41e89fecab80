#include "hquat/euclid.hpp"

#include <algorithm>

#include "hquat/dyadic.hpp"
#include "hquat/error.hpp"

namespace hquat {
namespace {

// Nearest integer to x/n (n > 0), ties to even.
std::int64_t round_div(std::int64_t x, std::int64_t n) {
    std::int64_t q = x / n;
    std::int64_t r = x % n;
    if (r < 0) {
        q -= 1;
        r += n;
    }
    // 2r vs n without overflow: r vs n - r
    if (r > n - r || (r == n - r && (q & 1) != 0)) ++q;
    return q;
}

// a * conj(b) (right) or conj(b) * a (left): the exact quotient times norm(b).
OrderElement scaled_quotient(const OrderElement& a, const OrderElement& b, Side side) {
    return side == Side::right ? a * conjugate(b) : conjugate(b) * a;
}

}  // namespace

DivisionResult div_rem(const OrderElement& a, const OrderElement& b, Side side) {
    require(!b.is_zero(), "div_rem: division by zero");
    const std::int64_t nb = norm(b);
    const OrderElement t = scaled_quotient(a, b, side);
    OrderElement base;
    for (std::size_t n = 0; n < 4; ++n) base.g[n] = round_div(t.g[n], nb);

    std::optional<DivisionResult> best;
    std::int64_t best_norm = 0;
    for (int code = 0; code < 81; ++code) {
        OrderElement q = base;
        int c = code;
        for (std::size_t n = 0; n < 4; ++n, c /= 3) q.g[n] = checked::add(q.g[n], c % 3 - 1);
        const OrderElement r = a - mul_on(side, q, b);
        const std::int64_t nr = norm(r);
        if (!best || nr < best_norm || (nr == best_norm && q < best->quotient)) {
            best = DivisionResult{q, r, side};
            best_norm = nr;
        }
    }
    ensure(best_norm < nb, "div_rem: no quotient candidate within the Euclidean bound");
    return *best;
}

std::optional<OrderElement> exact_quotient(const OrderElement& a, const OrderElement& d, Side side) {
    require(!d.is_zero(), "exact_quotient: zero divisor");
    const std::int64_t nd = norm(d);
    const OrderElement t = scaled_quotient(a, d, side);
    for (std::int64_t x : t.g)
        if (x % nd != 0) return std::nullopt;
    return divide_exact(t, nd);
}

GcdResult gcd(const OrderElement& a, const OrderElement& b, Side side) {
    require(!(a.is_zero() && b.is_zero()), "gcd: both arguments are zero");
    // Invariant: r_k = x_k*a + y_k*b (right) or a*x_k + b*y_k (left).
    OrderElement r0 = a, r1 = b;
    OrderElement x0 = basis::one, y0 = basis::zero;
    OrderElement x1 = basis::zero, y1 = basis::one;
    while (!r1.is_zero()) {
        const DivisionResult dr = div_rem(r0, r1, side);
        const OrderElement& q = dr.quotient;
        OrderElement x2 = x0 - mul_on(side, q, x1);
        OrderElement y2 = y0 - mul_on(side, q, y1);
        r0 = r1;
        r1 = dr.remainder;
        x0 = x1;
        y0 = y1;
        x1 = std::move(x2);
        y1 = std::move(y2);
    }

    // Normalize by a unit on the opposite side: u*d for a right gcd, d*u for a
    // left gcd. mul_on(side, u, d) produces exactly that product.
    const Side assoc_side = side == Side::right ? Side::left : Side::right;
    OrderElement unit = basis::one;
    if (norm(r0) % 2 != 0) {
        unit = primary_associate(r0, assoc_side).unit;
    } else {
        OrderElement best = r0;
        for (const OrderElement& u : units()) {
            const OrderElement cand = mul_on(side, u, r0);
            if (cand < best) {
                best = cand;
                unit = u;
            }
        }
    }
    return GcdResult{mul_on(side, unit, r0), {mul_on(side, unit, x0), mul_on(side, unit, y0)}, side};
}

}  // namespace hquat
