#include "hquat/modm.hpp"

#include <numeric>
#include <string>

#include "hquat/error.hpp"
#include "hquat/integer.hpp"

namespace hquat {
namespace {

void require_odd_modulus(std::int64_t m) {
    require(m >= 1 && m % 2 != 0, "modulus must be an odd positive integer, got " + std::to_string(m));
}

__extension__ typedef __int128 wide_t;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    const wide_t r = static_cast<wide_t>(a) * b % m;
    return static_cast<std::int64_t>(r < 0 ? r + m : r);
}

std::int64_t addmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return floor_mod(floor_mod(a, m) + floor_mod(b, m), m);
}

void require_same_modulus(std::int64_t a, std::int64_t b) {
    require(a == b, "mismatched moduli " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

ResidueElement make_residue(std::int64_t m, std::int64_t q1, std::int64_t q2, std::int64_t q3, std::int64_t q4) {
    require_odd_modulus(m);
    return {m, {floor_mod(q1, m), floor_mod(q2, m), floor_mod(q3, m), floor_mod(q4, m)}};
}

ResidueElement reduce_mod_m(const OrderElement& e, std::int64_t m) {
    require_odd_modulus(m);
    // Multiplying the v3, v4 coordinates by 1 + m (even, = 1 mod m) lands in H0:
    // (1+m) g v3 = (1+m)/2 * g * (1 + i + sqrt2 j).
    const std::int64_t half = (1 + m) / 2;
    const auto [g1, g2, g3, g4] = e.g;
    const std::int64_t h3 = mulmod(half, floor_mod(g3, m), m);
    const std::int64_t h4 = mulmod(half, floor_mod(g4, m), m);
    return make_residue(m, addmod(addmod(g1, h3, m), h4, m), addmod(addmod(g2, h3, m), h4, m), h3, h4);
}

OrderElement lift(const ResidueElement& x) {
    return from_half({checked::mul(2, x.q[0]), checked::mul(2, x.q[1]), checked::mul(2, x.q[2]),
                      checked::mul(2, x.q[3])});
}

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b) {
    require_same_modulus(a.m, b.m);
    ResidueElement r{a.m, {}};
    for (std::size_t n = 0; n < 4; ++n) r.q[n] = addmod(a.q[n], b.q[n], a.m);
    return r;
}

ResidueElement operator*(std::int64_t k, const ResidueElement& a) {
    ResidueElement r{a.m, {}};
    const std::int64_t kk = floor_mod(k, a.m);
    for (std::size_t n = 0; n < 4; ++n) r.q[n] = mulmod(kk, a.q[n], a.m);
    return r;
}

ResidueElement operator-(const ResidueElement& a, const ResidueElement& b) { return a + (-1) * b; }

ResidueElement operator*(const ResidueElement& x, const ResidueElement& y) {
    require_same_modulus(x.m, y.m);
    const std::int64_t m = x.m;
    const auto& a = x.q;
    const auto& b = y.q;
    auto mm = [m](std::int64_t u, std::int64_t v) { return mulmod(u, v, m); };
    const std::int64_t w = floor_mod(mm(a[0], b[0]) - mm(a[1], b[1]) - 2 * mm(a[2], b[2]) - 2 * mm(a[3], b[3]), m);
    const std::int64_t i = floor_mod(mm(a[0], b[1]) + mm(a[1], b[0]) + 2 * mm(a[2], b[3]) - 2 * mm(a[3], b[2]), m);
    const std::int64_t j = floor_mod(mm(a[0], b[2]) - mm(a[1], b[3]) + mm(a[2], b[0]) + mm(a[3], b[1]), m);
    const std::int64_t k = floor_mod(mm(a[0], b[3]) + mm(a[1], b[2]) - mm(a[2], b[1]) + mm(a[3], b[0]), m);
    return {m, {w, i, j, k}};
}

bool is_zero(const ResidueElement& x) { return x.q == std::array<std::int64_t, 4>{0, 0, 0, 0}; }

std::int64_t norm_mod(const ResidueElement& x) {
    const std::int64_t m = x.m;
    const auto& q = x.q;
    return floor_mod(mulmod(q[0], q[0], m) + mulmod(q[1], q[1], m) + 2 * mulmod(q[2], q[2], m) +
                         2 * mulmod(q[3], q[3], m),
                     m);
}

void for_each_residue(std::int64_t m, const std::function<void(const ResidueElement&)>& fn) {
    require_odd_modulus(m);
    ResidueElement x{m, {}};
    for (x.q[0] = 0; x.q[0] < m; ++x.q[0])
        for (x.q[1] = 0; x.q[1] < m; ++x.q[1])
            for (x.q[2] = 0; x.q[2] < m; ++x.q[2])
                for (x.q[3] = 0; x.q[3] < m; ++x.q[3]) fn(x);
}

RSParams solve_rs(std::int64_t m) {
    require_odd_modulus(m);
    const std::int64_t inv2 = (m + 1) / 2 % m;
    for (std::int64_t s = 0; s < m; ++s)
        for (std::int64_t r = 0; r < m; ++r)
            if (floor_mod(inv2 + mulmod(r, r, m) + mulmod(s, s, m), m) == 0) return {m, r, s};
    throw InvariantViolation("solve_rs: no solution for m = " + std::to_string(m));
}

namespace {

void require_params(const RSParams& p) {
    require_odd_modulus(p.m);
    const std::int64_t inv2 = (p.m + 1) / 2;
    require(floor_mod(inv2 + mulmod(p.r, p.r, p.m) + mulmod(p.s, p.s, p.m), p.m) == 0,
            "(r, s) do not satisfy 1/2 + r^2 + s^2 = 0 mod m");
}

}  // namespace

XiBasis xi_basis(const RSParams& p) {
    require_params(p);
    const std::int64_t m = p.m, r = p.r, s = p.s;
    XiBasis b{p,
              {make_residue(m, 1, 0, r, s), make_residue(m, 0, 1, s, -r), make_residue(m, 0, -1, s, -r),
               make_residue(m, 1, 0, -r, -s)}};
    const auto& [x1, x2, x3, x4] = b.xi;
    const ResidueElement zero{m, {}};
    const bool orthogonal = x1 * x3 == zero && x1 * x4 == zero && x2 * x1 == zero && x3 * x4 == zero &&
                            x4 * x1 == zero && x4 * x2 == zero && x2 * x2 == zero && x3 * x3 == zero;
    const bool paired = x1 * x1 == 2 * x1 && x2 * x3 == 2 * x1 && x1 * x2 == 2 * x2 && x2 * x4 == 2 * x2 &&
                        x3 * x1 == 2 * x3 && x4 * x3 == 2 * x3 && x3 * x2 == 2 * x4 && x4 * x4 == 2 * x4;
    ensure(orthogonal && paired, "xi_basis: product relations fail");
    return b;
}

MatrixModM tau(const ResidueElement& x, const RSParams& p) {
    require_same_modulus(x.m, p.m);
    const std::int64_t m = p.m;
    const auto& q = x.q;
    const std::int64_t r2 = 2 * p.r % m, s2 = 2 * p.s % m;
    auto mm = [m](std::int64_t u, std::int64_t v) { return mulmod(u, v, m); };
    return {m,
            floor_mod(q[0] - mm(r2, q[2]) - mm(s2, q[3]), m),
            floor_mod(q[1] - mm(s2, q[2]) + mm(r2, q[3]), m),
            floor_mod(-q[1] - mm(s2, q[2]) + mm(r2, q[3]), m),
            floor_mod(q[0] + mm(r2, q[2]) + mm(s2, q[3]), m)};
}

ResidueElement tau_inv(const MatrixModM& a, const RSParams& p) {
    require_same_modulus(a.m, p.m);
    const std::int64_t m = p.m;
    const std::int64_t inv2 = (m + 1) / 2 % m;
    auto mm = [m](std::int64_t u, std::int64_t v) { return mulmod(u, v, m); };
    const std::int64_t diff = a.alpha - a.delta, sum = a.beta + a.gamma;
    return make_residue(m, mm(inv2, a.alpha + a.delta), mm(inv2, a.beta - a.gamma),
                        mm(inv2, floor_mod(mm(p.r, diff) + mm(p.s, sum), m)),
                        mm(inv2, floor_mod(mm(p.s, diff) - mm(p.r, sum), m)));
}

MatrixModM operator+(const MatrixModM& a, const MatrixModM& b) {
    require_same_modulus(a.m, b.m);
    const std::int64_t m = a.m;
    return {m, addmod(a.alpha, b.alpha, m), addmod(a.beta, b.beta, m), addmod(a.gamma, b.gamma, m),
            addmod(a.delta, b.delta, m)};
}

MatrixModM operator*(const MatrixModM& a, const MatrixModM& b) {
    require_same_modulus(a.m, b.m);
    const std::int64_t m = a.m;
    auto mm = [m](std::int64_t u, std::int64_t v) { return mulmod(u, v, m); };
    return {m, addmod(mm(a.alpha, b.alpha), mm(a.beta, b.gamma), m), addmod(mm(a.alpha, b.beta), mm(a.beta, b.delta), m),
            addmod(mm(a.gamma, b.alpha), mm(a.delta, b.gamma), m), addmod(mm(a.gamma, b.beta), mm(a.delta, b.delta), m)};
}

std::int64_t det(const MatrixModM& a) {
    return floor_mod(mulmod(a.alpha, a.delta, a.m) - mulmod(a.beta, a.gamma, a.m), a.m);
}

MatrixModM identity_matrix(std::int64_t m) {
    require_odd_modulus(m);
    return {m, 1 % m, 0, 0, 1 % m};
}

bool is_primitive_to_m(const OrderElement& e, std::int64_t m) {
    require_odd_modulus(m);
    return std::gcd(content(e), m) == 1;
}

bool is_primitive_to_m(const ResidueElement& x) {
    std::int64_t g = x.m;
    for (std::int64_t c : x.q) g = std::gcd(g, c);
    return g == 1;
}

bool is_primitive_to_m(const MatrixModM& a) {
    return std::gcd(std::gcd(std::gcd(a.alpha, a.beta), std::gcd(a.gamma, a.delta)), a.m) == 1;
}

std::int64_t count_psi(std::int64_t m) {
    require_odd_modulus(m);
    std::int64_t total = 1;
    for (const auto& [p, k] : factorize(m)) {
        std::int64_t f = (p * p - 1) * (p + 1);
        for (int n = 1; n < k; ++n) f = checked::mul(f, p * p * p);
        total = checked::mul(total, f);
    }
    return total;
}

std::int64_t count_norm1(std::int64_t m) {
    require_odd_modulus(m);
    std::int64_t total = 1;
    for (const auto& [p, k] : factorize(m)) {
        std::int64_t f = p * (p * p - 1);
        for (int n = 1; n < k; ++n) f = checked::mul(f, p * p * p);
        total = checked::mul(total, f);
    }
    return total;
}

std::int64_t count_psi_enum(std::int64_t m) {
    std::int64_t count = 0;
    for_each_residue(m, [&](const ResidueElement& x) {
        if (is_primitive_to_m(x) && norm_mod(x) == 0) ++count;
    });
    return count;
}

std::int64_t count_norm1_enum(std::int64_t m) {
    std::int64_t count = 0;
    const std::int64_t target = 1 % m;
    for_each_residue(m, [&](const ResidueElement& x) {
        if (norm_mod(x) == target) ++count;
    });
    return count;
}

std::int64_t count_annihilator_enum(const ResidueElement& f, std::int64_t p) {
    require(p > 2 && is_prime(p), "count_annihilator_enum: p must be an odd prime");
    require_same_modulus(f.m, p);
    require(is_primitive_to_m(f), "count_annihilator_enum: f is not primitive to p");
    require(norm_mod(f) == 0, "count_annihilator_enum: norm of f is not divisible by p");
    std::int64_t count = 0;
    for_each_residue(p, [&](const ResidueElement& x) {
        if (is_zero(x * f)) ++count;
    });
    return count;
}

}  // namespace hquat
