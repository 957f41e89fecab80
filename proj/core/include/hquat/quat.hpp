#pragma once

/**
 * Exact arithmetic in the quaternion order spanned over Z by
 *
 *   v1 = 1,  v2 = i,  v3 = (1 + i + sqrt2 j)/2,  v4 = (1 + i + sqrt2 k)/2,
 *
 * whose norm restricted to the submodule H0 = <1, i, sqrt2 j, sqrt2 k> is the
 * quaternary form x^2 + y^2 + 2z^2 + 2w^2.
 *
 * The canonical representation is the v-basis coordinate tuple. Products are
 * taken in doubled standard coordinates, see HalfCoords.
 */

#include <array>
#include <compare>
#include <cstdint>
#include <span>

namespace hquat {

enum class Side { left, right };

struct HalfCoords;

// An element g1 v1 + g2 v2 + g3 v3 + g4 v4. Every integer tuple is valid.
struct OrderElement {
    std::array<std::int64_t, 4> g{0, 0, 0, 0};

    constexpr OrderElement() = default;
    constexpr OrderElement(std::int64_t g1, std::int64_t g2, std::int64_t g3, std::int64_t g4)
        : g{g1, g2, g3, g4} {}

    static constexpr OrderElement from_int(std::int64_t n) { return {n, 0, 0, 0}; }

    constexpr bool is_zero() const { return g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0; }

    friend constexpr bool operator==(const OrderElement&, const OrderElement&) = default;
    friend constexpr auto operator<=>(const OrderElement&, const OrderElement&) = default;
};

// (A + B i + C sqrt2 j + D sqrt2 k) / 2. Membership in the order is
// A = B (mod 2) and A = C + D (mod 2); all four even means the element is in H0.
struct HalfCoords {
    std::int64_t a = 0, b = 0, c = 0, d = 0;

    friend constexpr bool operator==(const HalfCoords&, const HalfCoords&) = default;
};

namespace basis {
inline constexpr OrderElement zero{0, 0, 0, 0};
inline constexpr OrderElement one{1, 0, 0, 0};
inline constexpr OrderElement i{0, 1, 0, 0};
inline constexpr OrderElement v3{0, 0, 1, 0};
inline constexpr OrderElement v4{0, 0, 0, 1};
inline constexpr OrderElement one_plus_i{1, 1, 0, 0};
inline constexpr OrderElement one_minus_i{1, -1, 0, 0};
}  // namespace basis

HalfCoords to_half(const OrderElement& e);

bool satisfies_parity(const HalfCoords& h);

// Throws InvalidArgument when the parity conditions fail.
OrderElement from_half(const HalfCoords& h);

OrderElement operator+(const OrderElement& a, const OrderElement& b);
OrderElement operator-(const OrderElement& a, const OrderElement& b);
OrderElement operator-(const OrderElement& a);
OrderElement operator*(const OrderElement& a, const OrderElement& b);
OrderElement operator*(std::int64_t k, const OrderElement& a);

OrderElement mul(const OrderElement& a, const OrderElement& b);
OrderElement conjugate(const OrderElement& e);

// g1^2+g2^2+g3^2+g4^2+g1g3+g2g3+g1g4+g2g4+g3g4.
std::int64_t norm(const OrderElement& e);

// e + conjugate(e), always a rational integer.
std::int64_t trace(const OrderElement& e);

// Divides every coordinate by k; throws InvariantViolation when inexact.
OrderElement divide_exact(const OrderElement& e, std::int64_t k);

// gcd of the four v-coordinates (0 for the zero element).
std::int64_t content(const OrderElement& e);

// The 24 units in the order they are conventionally listed: the twelve
// positive representatives first, then their negatives.
std::span<const OrderElement, 24> units();

// The twelve positive-sign units.
std::span<const OrderElement, 12> positive_units();

bool is_unit(const OrderElement& e);

// Inverse of a norm-1 element; throws InvalidArgument otherwise.
OrderElement unit_inverse(const OrderElement& u);

bool is_in_H0(const OrderElement& e);

// Multiplication on a chosen side: side == right gives a*b, side == left gives b*a.
inline OrderElement mul_on(Side side, const OrderElement& a, const OrderElement& b) {
    return side == Side::right ? a * b : b * a;
}

}  // namespace hquat
