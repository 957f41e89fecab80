#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace hquat;
using hquat::testing::random_element;
using hquat::testing::random_odd;

namespace {

template <typename Fn>
void for_each_in_box(std::int64_t b, Fn&& fn) {
    for (std::int64_t g1 = -b; g1 <= b; ++g1)
        for (std::int64_t g2 = -b; g2 <= b; ++g2)
            for (std::int64_t g3 = -b; g3 <= b; ++g3)
                for (std::int64_t g4 = -b; g4 <= b; ++g4) fn(OrderElement{g1, g2, g3, g4});
}

const OrderElement two = OrderElement::from_int(2);
const OrderElement one_plus_2v3 = basis::one + 2 * basis::v3;

}  // namespace

TEST(Parity, IsOdd) {
    EXPECT_TRUE(is_odd(basis::one));
    EXPECT_FALSE(is_odd(basis::one_plus_i));
    EXPECT_TRUE(is_odd(basis::v3));
    EXPECT_FALSE(is_odd(basis::zero));
}

TEST(ModOnePlusI, Examples) {
    EXPECT_EQ(residue_mod_1pi(basis::zero), CosetTag1pi::zero);
    EXPECT_EQ(residue_mod_1pi(basis::i), CosetTag1pi::one);
    EXPECT_EQ(residue_mod_1pi(basis::v4), CosetTag1pi::one_plus_v3);
    EXPECT_EQ(representative(CosetTag1pi::one_plus_v3), basis::one + basis::v3);
}

TEST(ModOnePlusI, RepresentativesAreDistinctCosets) {
    const CosetTag1pi tags[] = {CosetTag1pi::zero, CosetTag1pi::one, CosetTag1pi::v3, CosetTag1pi::one_plus_v3};
    for (auto s : tags)
        for (auto t : tags)
            if (s != t) EXPECT_EQ(norm(representative(s) - representative(t)) % 2, 1);
    for (int n = 0; n < 2000; ++n) {
        const OrderElement e = random_element(1000);
        const OrderElement diff = e - representative(residue_mod_1pi(e));
        EXPECT_TRUE(divides(basis::one_plus_i, diff, Side::left));
        EXPECT_TRUE(divides(basis::one_plus_i, diff, Side::right));
    }
}

TEST(DivideByOnePlusI, Examples) {
    EXPECT_EQ(divide_by_1pi(two, Side::right), basis::one_minus_i);
    EXPECT_EQ(divide_by_1pi(basis::one_plus_i, Side::right), basis::one);
    const OrderElement e = basis::one + basis::v3 - basis::v4;
    EXPECT_EQ(divide_by_1pi(e, Side::left), from_half({1, -1, 0, -1}));
    EXPECT_EQ(divide_by_1pi(e, Side::right), from_half({1, -1, 1, 0}));
    EXPECT_THROW(divide_by_1pi(basis::v3, Side::right), InvalidArgument);
}

TEST(DivideByOnePlusI, EvenNormIffDivisibleOnEitherSide) {
    for_each_in_box(4, [](const OrderElement& e) {
        const bool even = norm(e) % 2 == 0;
        ASSERT_EQ(divides(basis::one_plus_i, e, Side::left), even) << format(e);
        ASSERT_EQ(divides(basis::one_plus_i, e, Side::right), even) << format(e);
        if (even) {
            ASSERT_EQ(divide_by_1pi(e, Side::right) * basis::one_plus_i, e);
            ASSERT_EQ(basis::one_plus_i * divide_by_1pi(e, Side::left), e);
        }
    });
}

TEST(Valuation, Examples) {
    const Valuation1pi v2 = valuation_1pi(two);
    EXPECT_EQ(v2.r, 2);
    EXPECT_EQ(v2.odd_part, -basis::i);
    const Valuation1pi v1 = valuation_1pi(basis::one_plus_i);
    EXPECT_EQ(v1.r, 1);
    EXPECT_EQ(v1.odd_part, basis::one);
    const OrderElement odd{3, 1, -2, 5};
    ASSERT_TRUE(is_odd(odd));
    EXPECT_EQ(valuation_1pi(odd).r, 0);
    EXPECT_EQ(valuation_1pi(odd).odd_part, odd);
    EXPECT_THROW(valuation_1pi(basis::zero), InvalidArgument);
}

TEST(Valuation, MatchesTwoAdicValuationOfNorm) {
    for (int n = 0; n < 2000; ++n) {
        const OrderElement e = hquat::testing::random_nonzero(200) * power_1pi(int(hquat::testing::uniform(0, 6)));
        const Valuation1pi v = valuation_1pi(e);
        EXPECT_EQ(v.r, two_adic_valuation(norm(e)));
        EXPECT_TRUE(is_odd(v.odd_part));
        EXPECT_EQ(power_1pi(v.r) * v.odd_part, e);
    }
}

TEST(ModTwo, Representatives) {
    const auto reps = residues_mod_2();
    ASSERT_EQ(reps.size(), 16U);
    std::set<OrderElement> distinct(reps.begin(), reps.end());
    EXPECT_EQ(distinct.size(), 16U);
    int non_units = 0;
    for (const auto& r : reps) {
        if (!is_unit(r)) {
            ++non_units;
            EXPECT_EQ(norm(r) % 2, 0);
        }
    }
    EXPECT_EQ(non_units, 4);
    for (const auto& u : positive_units()) EXPECT_TRUE(distinct.count(u));
    for (const auto& r : {basis::zero, basis::one_plus_i, basis::one + basis::v3 + basis::v4,
                          basis::i + basis::v3 + basis::v4})
        EXPECT_TRUE(distinct.count(r));
    for (const auto& a : reps)
        for (const auto& b : reps)
            if (a != b) EXPECT_FALSE(content(a - b) % 2 == 0) << format(a) << " " << format(b);
}

TEST(ModTwo, Examples) {
    EXPECT_EQ(residue_mod_2(basis::zero), basis::zero);
    EXPECT_EQ(residue_mod_2(basis::v3), basis::v3);
    EXPECT_EQ(residue_mod_2(basis::one_plus_i + 2 * basis::v3), basis::one_plus_i);
    for (int n = 0; n < 2000; ++n) {
        const OrderElement e = random_element(1000);
        const OrderElement r = residue_mod_2(e);
        EXPECT_EQ(content(e - r) % 2, 0);
        EXPECT_TRUE(congruent_mod_2(e, r));
    }
}

TEST(ModTwo, UnitsPermuteResidueClassesOfOddElements) {
    const std::set<OrderElement> positive(positive_units().begin(), positive_units().end());
    for (int n = 0; n < 100; ++n) {
        const OrderElement b = random_odd(100);
        std::set<OrderElement> right_images, left_images;
        for (const auto& u : positive_units()) {
            right_images.insert(residue_mod_2(b * u));
            left_images.insert(residue_mod_2(u * b));
        }
        EXPECT_EQ(right_images, positive);
        EXPECT_EQ(left_images, positive);
    }
}

TEST(ModTwo, UnitCongruences) {
    const UnitCongruences c1 = unit_congruences_mod2(basis::one);
    EXPECT_EQ(c1.right, basis::one);
    EXPECT_EQ(c1.left, basis::one);
    const UnitCongruences c3 = unit_congruences_mod2(OrderElement::from_int(3));
    EXPECT_EQ(c3.right, basis::one);
    EXPECT_EQ(c3.left, basis::one);
    for (int n = 0; n < 500; ++n) {
        const OrderElement b = n == 0 ? basis::v3 : random_odd(100);
        const UnitCongruences c = unit_congruences_mod2(b);
        EXPECT_TRUE(congruent_mod_2(b * c.right, basis::one));
        EXPECT_TRUE(congruent_mod_2(c.left * b, basis::one));
    }
    EXPECT_THROW(unit_congruences_mod2(two), InvalidArgument);
}

TEST(Primary, Examples) {
    EXPECT_EQ(is_primary(basis::one), PrimaryClass::one);
    EXPECT_EQ(is_primary(one_plus_2v3), PrimaryClass::one_plus_2v3);
    EXPECT_EQ(is_primary(basis::i), PrimaryClass::not_primary);
    EXPECT_EQ(is_primary(OrderElement::from_int(3)), PrimaryClass::not_primary);
    EXPECT_EQ(is_primary(OrderElement::from_int(-3)), PrimaryClass::one);
}

TEST(Primary, IdealResidues) {
    EXPECT_EQ(ideal_2_1pi_residue(OrderElement::from_int(3)), -basis::one);
    EXPECT_EQ(ideal_2_1pi_residue(basis::one + 2 * (basis::v3 * basis::v3)), -basis::one - 2 * basis::v3);
    EXPECT_EQ(ideal_2_1pi_residue(OrderElement::from_int(5)), basis::one);
    const std::set<OrderElement> allowed{basis::one, -basis::one, one_plus_2v3, -one_plus_2v3};
    for (int n = 0; n < 2000; ++n) {
        const OrderElement e = random_element(1000);
        const OrderElement r = ideal_2_1pi_residue(e);
        EXPECT_TRUE(divisible_by_2_1pi(e - r));
        if (congruent_mod_2(e, basis::one)) EXPECT_TRUE(allowed.count(r));
    }
}

TEST(Primary, TheFourOddClassesAreDistinct) {
    const OrderElement reps[] = {basis::one, -basis::one, one_plus_2v3, -one_plus_2v3};
    for (const auto& a : reps)
        for (const auto& b : reps)
            if (a != b) EXPECT_FALSE(divisible_by_2_1pi(a - b));
}

TEST(Primary, PrimaryElementsLieInH0) {
    for_each_in_box(4, [](const OrderElement& e) {
        if (primary(e)) ASSERT_TRUE(is_in_H0(e)) << format(e);
    });
}

TEST(Primary, ProductOfPrimariesIsPrimary) {
    std::vector<OrderElement> primaries;
    for_each_in_box(3, [&](const OrderElement& e) {
        if (primary(e)) primaries.push_back(e);
    });
    ASSERT_GT(primaries.size(), 20U);
    for (int n = 0; n < 3000; ++n) {
        const auto& a = primaries[std::size_t(hquat::testing::uniform(0, std::int64_t(primaries.size()) - 1))];
        const auto& b = primaries[std::size_t(hquat::testing::uniform(0, std::int64_t(primaries.size()) - 1))];
        EXPECT_TRUE(primary(a * b)) << format(a) << " " << format(b);
    }
}

TEST(PrimaryAssociate, Examples) {
    const PrimaryAssociate p1 = primary_associate(basis::one, Side::right);
    EXPECT_EQ(p1.unit, basis::one);
    EXPECT_EQ(p1.primary, basis::one);
    const PrimaryAssociate pb = primary_associate(one_plus_2v3, Side::left);
    EXPECT_EQ(pb.unit, basis::one);
    EXPECT_EQ(pb.primary, one_plus_2v3);
    const PrimaryAssociate pi = primary_associate(basis::i, Side::right);
    EXPECT_EQ(pi.unit, -basis::i);
    EXPECT_EQ(pi.primary, basis::one);
    EXPECT_THROW(primary_associate(basis::one_plus_i, Side::right), InvalidArgument);
}

TEST(PrimaryAssociate, ExactlyOneUnitPerSide) {
    for (int n = 0; n < 500; ++n) {
        const OrderElement b = random_odd(300);
        int right_hits = 0, left_hits = 0;
        for (const auto& u : units()) {
            right_hits += primary(b * u);
            left_hits += primary(u * b);
        }
        EXPECT_EQ(right_hits, 1);
        EXPECT_EQ(left_hits, 1);
        const PrimaryAssociate r = primary_associate(b, Side::right);
        EXPECT_EQ(r.primary, b * r.unit);
        EXPECT_TRUE(primary(r.primary));
        const PrimaryAssociate l = primary_associate(b, Side::left);
        EXPECT_EQ(l.primary, l.unit * b);
        EXPECT_TRUE(primary(l.primary));
    }
}
