#pragma once

#include <optional>
#include <utility>

#include "hquat/quat.hpp"

namespace hquat {

// side == right:  a = quotient * b + remainder
// side == left:   a = b * quotient + remainder
// with norm(remainder) < norm(b) in both cases.
struct DivisionResult {
    OrderElement quotient;
    OrderElement remainder;
    Side side = Side::right;
};

// side == right: gcd divides both inputs on the right and gcd = x*a + y*b.
// side == left:  gcd divides both inputs on the left  and gcd = a*x + b*y.
struct GcdResult {
    OrderElement gcd;
    std::pair<OrderElement, OrderElement> cofactors;  // (x, y)
    Side side = Side::right;
};

/// Division with remainder. The quotient is the lattice point nearest the
/// exact rational quotient among the 81 points around its coordinatewise
/// rounding (ties broken lexicographically), so the result is deterministic.
/// Throws InvalidArgument for b == 0 and InvariantViolation if no candidate
/// reaches norm(remainder) < norm(b).
DivisionResult div_rem(const OrderElement& a, const OrderElement& b, Side side);

/// Euclidean one-sided gcd with Bezout cofactors. The gcd is normalized to its
/// primary associate when odd and to the lexicographically smallest associate
/// otherwise; associates are taken on the side that keeps it a divisor (unit
/// on the left for a right gcd). Throws InvalidArgument when both are zero.
GcdResult gcd(const OrderElement& a, const OrderElement& b, Side side);

// q with a = q*d (side right) or a = d*q (side left), when it exists in the order.
std::optional<OrderElement> exact_quotient(const OrderElement& a, const OrderElement& d, Side side);

inline bool divides(const OrderElement& d, const OrderElement& a, Side side) {
    return exact_quotient(a, d, side).has_value();
}

}  // namespace hquat
