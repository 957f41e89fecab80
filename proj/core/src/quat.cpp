#include "hquat/quat.hpp"

#include <numeric>

#include "hquat/error.hpp"

namespace hquat {

using checked::add;
using checked::mul;
using checked::sub;

HalfCoords to_half(const OrderElement& e) {
    const auto [g1, g2, g3, g4] = e.g;
    const std::int64_t s = add(g3, g4);
    return {add(mul(2, g1), s), add(mul(2, g2), s), g3, g4};
}

bool satisfies_parity(const HalfCoords& h) {
    const auto odd = [](std::int64_t x) { return (x & 1) != 0; };
    return odd(h.a) == odd(h.b) && odd(h.a) == (odd(h.c) != odd(h.d));
}

OrderElement from_half(const HalfCoords& h) {
    require(satisfies_parity(h), "half coordinates violate the order's parity conditions");
    const std::int64_t s = add(h.c, h.d);
    return {sub(h.a, s) / 2, sub(h.b, s) / 2, h.c, h.d};
}

OrderElement operator+(const OrderElement& a, const OrderElement& b) {
    return {add(a.g[0], b.g[0]), add(a.g[1], b.g[1]), add(a.g[2], b.g[2]), add(a.g[3], b.g[3])};
}

OrderElement operator-(const OrderElement& a, const OrderElement& b) {
    return {sub(a.g[0], b.g[0]), sub(a.g[1], b.g[1]), sub(a.g[2], b.g[2]), sub(a.g[3], b.g[3])};
}

OrderElement operator-(const OrderElement& a) { return basis::zero - a; }

OrderElement operator*(std::int64_t k, const OrderElement& a) {
    return {mul(k, a.g[0]), mul(k, a.g[1]), mul(k, a.g[2]), mul(k, a.g[3])};
}

OrderElement mul(const OrderElement& x, const OrderElement& y) {
    // With x = (a0 + a1 i + a2 sqrt2 j + a3 sqrt2 k)/2 and likewise y, the
    // Hamilton product scaled by 4 has sqrt2-adjusted components below. The
    // doubled coordinates of x*y are those divided by 2.
    const HalfCoords p = to_half(x), q = to_half(y);
    const std::int64_t w = sub(sub(mul(p.a, q.a), mul(p.b, q.b)),
                               mul(2, add(mul(p.c, q.c), mul(p.d, q.d))));
    const std::int64_t u = add(add(mul(p.a, q.b), mul(p.b, q.a)),
                               mul(2, sub(mul(p.c, q.d), mul(p.d, q.c))));
    const std::int64_t j = add(sub(mul(p.a, q.c), mul(p.b, q.d)), add(mul(p.c, q.a), mul(p.d, q.b)));
    const std::int64_t k = add(add(mul(p.a, q.d), mul(p.b, q.c)), sub(mul(p.d, q.a), mul(p.c, q.b)));
    ensure(w % 2 == 0 && u % 2 == 0 && j % 2 == 0 && k % 2 == 0,
           "product left the doubled lattice");
    const HalfCoords h{w / 2, u / 2, j / 2, k / 2};
    ensure(satisfies_parity(h), "product left the order");
    return from_half(h);
}

OrderElement operator*(const OrderElement& a, const OrderElement& b) { return mul(a, b); }

OrderElement conjugate(const OrderElement& e) {
    const auto [g1, g2, g3, g4] = e.g;
    return {add(add(g1, g3), g4), checked::neg(g2), checked::neg(g3), checked::neg(g4)};
}

std::int64_t norm(const OrderElement& e) {
    const auto [g1, g2, g3, g4] = e.g;
    std::int64_t n = 0;
    for (std::int64_t t : {mul(g1, g1), mul(g2, g2), mul(g3, g3), mul(g4, g4), mul(g1, g3),
                           mul(g2, g3), mul(g1, g4), mul(g2, g4), mul(g3, g4)})
        n = add(n, t);
    return n;
}

std::int64_t trace(const OrderElement& e) { return to_half(e).a; }

OrderElement divide_exact(const OrderElement& e, std::int64_t k) {
    require(k != 0, "divide_exact: division by zero");
    for (std::int64_t x : e.g) ensure(x % k == 0, "divide_exact: inexact division");
    return {e.g[0] / k, e.g[1] / k, e.g[2] / k, e.g[3] / k};
}

std::int64_t content(const OrderElement& e) {
    std::int64_t c = 0;
    for (std::int64_t x : e.g) c = std::gcd(c, x);
    return c;
}

namespace {

constexpr std::array<OrderElement, 24> make_units() {
    const std::array<OrderElement, 12> pos{{
        {1, 0, 0, 0},    // v1
        {0, 1, 0, 0},    // v2
        {0, 0, 1, 0},    // v3
        {0, 0, 0, 1},    // v4
        {-1, 0, 1, 0},   // v3 - v1
        {0, -1, 1, 0},   // v3 - v2
        {0, 0, -1, 1},   // v4 - v3
        {-1, 0, 0, 1},   // v4 - v1
        {0, -1, 0, 1},   // v4 - v2
        {-1, -1, 1, 0},  // v3 - v2 - v1
        {-1, -1, 0, 1},  // v4 - v2 - v1
        {-1, -1, 1, 1},  // v4 + v3 - v2 - v1
    }};
    std::array<OrderElement, 24> all{};
    for (std::size_t n = 0; n < 12; ++n) {
        all[n] = pos[n];
        const auto& g = pos[n].g;
        all[n + 12] = OrderElement{-g[0], -g[1], -g[2], -g[3]};
    }
    return all;
}

constexpr std::array<OrderElement, 24> kUnits = make_units();

}  // namespace

std::span<const OrderElement, 24> units() { return kUnits; }

std::span<const OrderElement, 12> positive_units() {
    return std::span<const OrderElement, 24>(kUnits).first<12>();
}

bool is_unit(const OrderElement& e) { return norm(e) == 1; }

OrderElement unit_inverse(const OrderElement& u) {
    require(is_unit(u), "unit_inverse: argument is not a unit");
    return conjugate(u);
}

bool is_in_H0(const OrderElement& e) {
    const HalfCoords h = to_half(e);
    return h.a % 2 == 0 && h.b % 2 == 0 && h.c % 2 == 0 && h.d % 2 == 0;
}

}  // namespace hquat
