#pragma once

/**
 * The order modulo an odd integer m and its isomorphism with 2x2 matrices
 * over Z/m.
 *
 * Residues are written in the H0 coordinates q1 + q2 i + q3 sqrt2 j + q4 sqrt2 k
 * with every q in [0, m); these m^4 tuples form a complete residue system.
 * Choosing (r, s) with 1/2 + r^2 + s^2 = 0 (mod m) gives the basis
 *
 *   xi1 = 1 + r sqrt2 j + s sqrt2 k      xi2 = i + s sqrt2 j - r sqrt2 k
 *   xi3 = -i + s sqrt2 j - r sqrt2 k     xi4 = 1 - r sqrt2 j - s sqrt2 k
 *
 * and 2q = alpha xi1 + beta xi2 + gamma xi3 + delta xi4 defines tau(q) as the
 * matrix [[alpha, beta], [gamma, delta]]. tau is a ring isomorphism taking the
 * norm to the determinant.
 *
 * m = 1 is accepted throughout: the zero residue is then the only element and
 * all counting formulas reduce to empty products.
 */

#include <array>
#include <cstdint>
#include <functional>

#include "hquat/quat.hpp"

namespace hquat {

struct ResidueElement {
    std::int64_t m = 1;
    std::array<std::int64_t, 4> q{0, 0, 0, 0};

    friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
};

struct RSParams {
    std::int64_t m = 1;
    std::int64_t r = 0;
    std::int64_t s = 0;

    friend bool operator==(const RSParams&, const RSParams&) = default;
};

struct XiBasis {
    RSParams params;
    std::array<ResidueElement, 4> xi;
};

struct MatrixModM {
    std::int64_t m = 1;
    std::int64_t alpha = 0, beta = 0, gamma = 0, delta = 0;

    friend bool operator==(const MatrixModM&, const MatrixModM&) = default;
};

// --- residues -------------------------------------------------------------

// Throws InvalidArgument for even or non-positive m.
ResidueElement reduce_mod_m(const OrderElement& e, std::int64_t m);

// Canonical residue from arbitrary H0 coordinates.
ResidueElement make_residue(std::int64_t m, std::int64_t q1, std::int64_t q2, std::int64_t q3, std::int64_t q4);

// The H0 element with the residue's coordinates.
OrderElement lift(const ResidueElement& x);

ResidueElement operator+(const ResidueElement& a, const ResidueElement& b);
ResidueElement operator-(const ResidueElement& a, const ResidueElement& b);
ResidueElement operator*(const ResidueElement& a, const ResidueElement& b);
ResidueElement operator*(std::int64_t k, const ResidueElement& a);

bool is_zero(const ResidueElement& x);
std::int64_t norm_mod(const ResidueElement& x);

// Calls fn on each of the m^4 residues in lexicographic order of (q1..q4).
void for_each_residue(std::int64_t m, const std::function<void(const ResidueElement&)>& fn);

// --- correspondence -------------------------------------------------------

// Smallest (r, s) in [0, m)^2 with 1/2 + r^2 + s^2 = 0 (mod m), ordered by s
// first and then r. m = 3 gives (1, 0), m = 5 gives (1, 1).
RSParams solve_rs(std::int64_t m);

// Throws InvariantViolation if any of the sixteen product relations fails.
XiBasis xi_basis(const RSParams& p);

MatrixModM tau(const ResidueElement& q, const RSParams& p);
ResidueElement tau_inv(const MatrixModM& a, const RSParams& p);

MatrixModM operator+(const MatrixModM& a, const MatrixModM& b);
MatrixModM operator*(const MatrixModM& a, const MatrixModM& b);
std::int64_t det(const MatrixModM& a);
MatrixModM identity_matrix(std::int64_t m);

// --- primitivity and counts -----------------------------------------------

bool is_primitive_to_m(const OrderElement& e, std::int64_t m);
bool is_primitive_to_m(const ResidueElement& x);
bool is_primitive_to_m(const MatrixModM& a);

// m^3 prod (1 - p^-2)(1 + p^-1): residues primitive to m with norm = 0 (mod m).
std::int64_t count_psi(std::int64_t m);
std::int64_t count_psi_enum(std::int64_t m);

// m^3 prod (1 - p^-2): residues with norm = 1 (mod m).
std::int64_t count_norm1(std::int64_t m);
std::int64_t count_norm1_enum(std::int64_t m);

// Residues x with x*f = 0 (mod p). Requires p an odd prime and f primitive to
// p with norm divisible by p.
std::int64_t count_annihilator_enum(const ResidueElement& f, std::int64_t p);

}  // namespace hquat
