#include "hquat/prime_factor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hquat/dyadic.hpp"
#include "hquat/error.hpp"
#include "hquat/euclid.hpp"
#include "hquat/integer.hpp"
#include "hquat/modm.hpp"
#include "hquat/rep_count.hpp"

namespace hquat {

bool is_prime_quat(const OrderElement& e) { return is_prime(norm(e)); }

namespace {

void require_lift_preconditions(const OrderElement& f, std::int64_t p) {
    require(p > 2 && is_prime(p), "p must be an odd prime, got " + std::to_string(p));
    require(is_primitive_to_m(f, p), "element is not primitive to p");
    require(norm(f) % p == 0, "norm of element is not divisible by p");
}

}  // namespace

OrderElement lift_nondegenerate(const OrderElement& f, std::int64_t p) {
    require_lift_preconditions(f, p);
    const std::int64_t p2 = checked::mul(p, p);
    if (norm(f) % p2 != 0) return f;
    const auto [f1, f2, f3, f4] = f.g;
    // Gradient of the norm form at f.
    const std::array<std::int64_t, 4> coeff{f4 + f3 + 2 * f1, f4 + f3 + 2 * f2, f4 + 2 * f3 + f2 + f1,
                                            2 * f4 + f3 + f2 + f1};
    for (std::size_t n = 0; n < 4; ++n) {
        if (floor_mod(coeff[n], p) == 0) continue;
        OrderElement step;
        step.g[n] = checked::mul(p, inverse_mod(coeff[n], p));
        const OrderElement lifted = f + step;
        ensure(norm(lifted) % p == 0 && norm(lifted) % p2 != 0, "lift_nondegenerate: lift failed");
        return lifted;
    }
    throw InvariantViolation("lift_nondegenerate: all gradient coefficients vanish mod p");
}

PrimaryPrime primary_prime_from(const OrderElement& f, std::int64_t p) {
    const OrderElement lifted = lift_nondegenerate(f, p);
    const GcdResult g = gcd(lifted, OrderElement::from_int(p), Side::right);
    ensure(norm(g.gcd) == p, "primary_prime_from: right gcd does not have norm p");
    ensure(primary(g.gcd), "primary_prime_from: gcd not primary");
    return {g.gcd, p};
}

PrimaryPrime p_conjugate(const PrimaryPrime& pi) {
    require(pi.p % 2 != 0, "p_conjugate: norm must be odd");
    switch (is_primary(pi.element)) {
        case PrimaryClass::one: return {conjugate(pi.element), pi.p};
        case PrimaryClass::one_plus_2v3: return {-conjugate(pi.element), pi.p};
        case PrimaryClass::not_primary: break;
    }
    throw InvalidArgument("p_conjugate: element is not primary");
}

std::vector<OrderElement> primes_of_norm(std::int64_t p) {
    require(is_prime(p), "primes_of_norm: " + std::to_string(p) + " is not prime");
    return enumerate_norm_solutions(p, Module::H);
}

std::vector<PrimaryPrime> primary_primes_of_norm(std::int64_t p) {
    require(p > 2 && is_prime(p), "primary_primes_of_norm: p must be an odd prime");
    std::vector<PrimaryPrime> out;
    for (const OrderElement& e : enumerate_norm_solutions(p, Module::H))
        if (primary(e)) out.push_back({e, p});
    return out;
}

std::vector<OrderElement> primes_over_two() {
    std::vector<OrderElement> out;
    for (const OrderElement& u : units()) out.push_back(basis::one_plus_i * u);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_primitive(const OrderElement& c) { return primary(c) && content(c) == 1; }

std::vector<PrimaryPrime> factor_primitive(const OrderElement& c, std::span<const std::int64_t> prime_order) {
    require(is_primitive(c), "factor_primitive: element is not primitive");
    const std::int64_t n = norm(c);
    require(n % 2 != 0, "factor_primitive: norm must be odd");
    std::vector<std::int64_t> sorted(prime_order.begin(), prime_order.end());
    std::sort(sorted.begin(), sorted.end());
    require(sorted == prime_factors_with_multiplicity(n),
            "factor_primitive: prime order does not match the factorization of the norm");

    std::vector<PrimaryPrime> out;
    OrderElement rest = c;
    for (std::int64_t p : prime_order) {
        // The left gcd with p has norm p; normalized it is the primary prime pi with rest = pi * rest'.
        const GcdResult g = gcd(rest, OrderElement::from_int(p), Side::left);
        ensure(norm(g.gcd) == p, "factor_primitive: left gcd does not have norm p");
        ensure(primary(g.gcd), "factor_primitive: left gcd is not primary");
        const auto next = exact_quotient(rest, g.gcd, Side::left);
        ensure(next.has_value(), "factor_primitive: left gcd does not divide");
        out.push_back({g.gcd, p});
        rest = *next;
    }
    ensure(rest == basis::one, "factor_primitive: final cofactor is not 1");
    return out;
}

Factorization full_factor(const OrderElement& x) {
    require(!x.is_zero(), "full_factor: zero element");
    Factorization f;
    const Valuation1pi v = valuation_1pi(x);
    f.r = v.r;

    // odd = unit * b with b primary.
    const PrimaryAssociate pa = primary_associate(v.odd_part, Side::left);
    f.unit = unit_inverse(pa.unit);
    const OrderElement& b = pa.primary;

    f.content = content(b);
    const OrderElement plus = divide_exact(b, f.content);
    const OrderElement minus = -plus;
    ensure(primary(plus) != primary(minus), "full_factor: sign of the content is not determined");
    f.sign = primary(plus) ? 1 : -1;
    const OrderElement& prim = f.sign == 1 ? plus : minus;

    const std::vector<std::int64_t> order = prime_factors_with_multiplicity(norm(prim));
    f.primes = factor_primitive(prim, order);

    // -1 is both a unit and a sign; keep the unit among the positive twelve.
    const auto pos = positive_units();
    if (std::find(pos.begin(), pos.end(), f.unit) == pos.end()) {
        f.unit = -f.unit;
        f.sign = -f.sign;
    }
    ensure(reassemble(f) == x, "full_factor: reassembly mismatch");
    return f;
}

OrderElement reassemble(const Factorization& f) {
    OrderElement y = power_1pi(f.r) * f.unit;
    y = checked::mul(f.sign, f.content) * y;
    for (const PrimaryPrime& pi : f.primes) y = y * pi.element;
    return y;
}

}  // namespace hquat
