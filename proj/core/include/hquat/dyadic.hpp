#pragma once

// Structure of the order at the prime above 2: divisibility by (1+i),
// residues modulo (1+i), 2 and 2(1+i), and primary associates.

#include <cstdint>

#include "hquat/quat.hpp"

namespace hquat {

// An element is odd iff its norm is odd. is_odd(0) is false.
bool is_odd(const OrderElement& e);

// Coset of e modulo the (two-sided) ideal (1+i): one of 0, 1, v3, 1+v3.
enum class CosetTag1pi { zero, one, v3, one_plus_v3 };
CosetTag1pi residue_mod_1pi(const OrderElement& e);
OrderElement representative(CosetTag1pi tag);

// h with e = h*(1+i) (side right) or e = (1+i)*h (side left).
// Throws InvalidArgument for odd norm.
OrderElement divide_by_1pi(const OrderElement& e, Side side);

struct Valuation1pi {
    int r = 0;
    OrderElement odd_part;  // e = (1+i)^r * odd_part
};
// Throws InvalidArgument for e == 0.
Valuation1pi valuation_1pi(const OrderElement& e);

// (1+i)^r
OrderElement power_1pi(int r);

// One of the 16 coset representatives modulo 2: the twelve positive units,
// 0, 1+i, 1+v3+v4 and i+v3+v4.
OrderElement residue_mod_2(const OrderElement& e);
std::span<const OrderElement, 16> residues_mod_2();

bool congruent_mod_2(const OrderElement& a, const OrderElement& b);

// e lies in the ideal (2(1+i)); sidedness does not matter for this ideal.
bool divisible_by_2_1pi(const OrderElement& e);

enum class PrimaryClass { one, one_plus_2v3, not_primary };
PrimaryClass is_primary(const OrderElement& e);

inline bool primary(const OrderElement& e) { return is_primary(e) != PrimaryClass::not_primary; }

struct PrimaryAssociate {
    OrderElement unit;
    OrderElement primary;
};

/// Unique unit u making b*u (side right) or u*b (side left) primary.
/// Scans all 24 units; throws InvalidArgument for even b and
/// InvariantViolation unless exactly one unit qualifies.
PrimaryAssociate primary_associate(const OrderElement& b, Side side);

struct UnitCongruences {
    OrderElement right;  // b*right = 1 (mod 2)
    OrderElement left;   // left*b  = 1 (mod 2)
};
UnitCongruences unit_congruences_mod2(const OrderElement& b);

// Canonical representative of e modulo 2(1+i). The 64 classes are written
// s + 2t with s a mod-2 representative and t a mod-(1+i) representative,
// except that for e = 1 (mod 2) the representative is one of
// 1, -1, 1+2v3, -1-2v3.
OrderElement ideal_2_1pi_residue(const OrderElement& e);

}  // namespace hquat
