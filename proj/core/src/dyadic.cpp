#include "hquat/dyadic.hpp"

#include <array>
#include <optional>

#include "hquat/error.hpp"

namespace hquat {

bool is_odd(const OrderElement& e) { return norm(e) % 2 != 0; }

CosetTag1pi residue_mod_1pi(const OrderElement& e) {
    const auto [g1, g2, g3, g4] = e.g;
    const bool s = ((g1 + g2 + g4) & 1) != 0;
    const bool t = ((g3 + g4) & 1) != 0;
    if (s) return t ? CosetTag1pi::one_plus_v3 : CosetTag1pi::one;
    return t ? CosetTag1pi::v3 : CosetTag1pi::zero;
}

OrderElement representative(CosetTag1pi tag) {
    switch (tag) {
        case CosetTag1pi::zero: return basis::zero;
        case CosetTag1pi::one: return basis::one;
        case CosetTag1pi::v3: return basis::v3;
        case CosetTag1pi::one_plus_v3: return basis::one + basis::v3;
    }
    throw InvariantViolation("unknown coset tag");
}

OrderElement divide_by_1pi(const OrderElement& e, Side side) {
    require(norm(e) % 2 == 0, "divide_by_1pi: element has odd norm");
    const OrderElement t = side == Side::right ? e * basis::one_minus_i : basis::one_minus_i * e;
    return divide_exact(t, 2);
}

Valuation1pi valuation_1pi(const OrderElement& e) {
    require(!e.is_zero(), "valuation_1pi: zero element");
    Valuation1pi v{0, e};
    while (norm(v.odd_part) % 2 == 0) {
        v.odd_part = divide_by_1pi(v.odd_part, Side::left);
        ++v.r;
    }
    return v;
}

OrderElement power_1pi(int r) {
    require(r >= 0, "power_1pi: negative exponent");
    OrderElement x = basis::one;
    for (int n = 0; n < r; ++n) x = basis::one_plus_i * x;
    return x;
}

namespace {

// The twelve positive units followed by the four non-units.
constexpr std::array<OrderElement, 16> kMod2Listing{{
    {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1},
    {-1, 0, 1, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {-1, 0, 0, 1},
    {0, -1, 0, 1}, {-1, -1, 1, 0}, {-1, -1, 0, 1}, {-1, -1, 1, 1},
    {0, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 1}, {0, 1, 1, 1},
}};

constexpr unsigned parity_bits(const OrderElement& e) {
    unsigned bits = 0;
    for (std::int64_t x : e.g) bits = (bits << 1) | static_cast<unsigned>(x & 1);
    return bits;
}

// Indexed by the parity bits (g1 g2 g3 g4), g1 high.
constexpr std::array<OrderElement, 16> kMod2ByBits = [] {
    std::array<OrderElement, 16> t{};
    for (const auto& r : kMod2Listing) t[parity_bits(r)] = r;
    return t;
}();

}  // namespace

OrderElement residue_mod_2(const OrderElement& e) {
    return kMod2ByBits[parity_bits(e)];
}

std::span<const OrderElement, 16> residues_mod_2() { return kMod2Listing; }

bool congruent_mod_2(const OrderElement& a, const OrderElement& b) {
    const OrderElement d = a - b;
    for (std::int64_t x : d.g)
        if (x % 2 != 0) return false;
    return true;
}

bool divisible_by_2_1pi(const OrderElement& e) {
    for (std::int64_t x : e.g)
        if (x % 2 != 0) return false;
    const OrderElement half = divide_exact(e, 2);
    if (norm(half) % 2 != 0) return false;
    divide_by_1pi(half, Side::right);  // exactness is asserted inside
    return true;
}

PrimaryClass is_primary(const OrderElement& e) {
    if (divisible_by_2_1pi(e - basis::one)) return PrimaryClass::one;
    if (divisible_by_2_1pi(e - (basis::one + 2 * basis::v3))) return PrimaryClass::one_plus_2v3;
    return PrimaryClass::not_primary;
}

PrimaryAssociate primary_associate(const OrderElement& b, Side side) {
    require(is_odd(b), "primary_associate: element is not odd");
    std::optional<PrimaryAssociate> found;
    for (const OrderElement& u : units()) {
        const OrderElement c = side == Side::right ? b * u : u * b;
        if (primary(c)) {
            ensure(!found, "primary_associate: more than one primary associate");
            found = PrimaryAssociate{u, c};
        }
    }
    ensure(found.has_value(), "primary_associate: no primary associate");
    return *found;
}

UnitCongruences unit_congruences_mod2(const OrderElement& b) {
    require(is_odd(b), "unit_congruences_mod2: element is not odd");
    std::optional<OrderElement> right, left;
    for (const OrderElement& u : units()) {
        if (!right && congruent_mod_2(b * u, basis::one)) right = u;
        if (!left && congruent_mod_2(u * b, basis::one)) left = u;
    }
    ensure(right && left, "unit_congruences_mod2: no unit inverts the element mod 2");
    return {*right, *left};
}

OrderElement ideal_2_1pi_residue(const OrderElement& e) {
    const OrderElement s = residue_mod_2(e);
    const OrderElement t = representative(residue_mod_1pi(divide_exact(e - s, 2)));
    const OrderElement rep = s + 2 * t;
    if (s == basis::one) {
        // 1 + 2t for t in {0, 1, v3, 1+v3} is 1, 3, 1+2v3, 3+2v3; the last two
        // classes are also those of -1 and -1-2v3.
        const OrderElement minus_one = -basis::one;
        const OrderElement minus_one_minus_2v3 = -(basis::one + 2 * basis::v3);
        for (const OrderElement& c : {basis::one, minus_one, basis::one + 2 * basis::v3, minus_one_minus_2v3})
            if (divisible_by_2_1pi(rep - c)) return c;
        throw InvariantViolation("ideal_2_1pi_residue: class of 1 mod 2 not matched");
    }
    return rep;
}

}  // namespace hquat
