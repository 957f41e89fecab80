// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hquat/hquat.hpp"

using namespace hquat;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::mt19937_64 rng{20261017};

std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng);
}

OrderElement random_element(std::int64_t b) { return {uniform(-b, b), uniform(-b, b), uniform(-b, b), uniform(-b, b)}; }

OrderElement random_nonzero(std::int64_t b) {
    for (;;) {
        const OrderElement e = random_element(b);
        if (!e.is_zero()) return e;
    }
}

template <typename... Args>
std::string str(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

Verdict representation_formula() {
    const auto start = std::chrono::steady_clock::now();
    for (std::int64_t n = 1; n <= 5000; ++n) {
        const std::int64_t f = rep_count_formula(n).formula_count;
        const std::int64_t o = rep_count_oracle({n, Restriction::none}, kDefaultOracleBound, 1);
        if (f != o) return {false, str("n=", n, " formula=", f, " oracle=", o)};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60.0) return {false, str("took ", secs, " s")};
    return {true, str("n in [1,5000], ", secs, " s single-threaded")};
}

Verdict complementary() {
    int checked = 0;
    for (std::int64_t m = 1; m <= 199; m += 2) {
        for (Restriction c : {Restriction::case_i, Restriction::case_ii, Restriction::case_iii}) {
            const std::int64_t n = complementary_n(m, c);
            const std::int64_t f = complementary_count_formula(m, c);
            const std::int64_t o = rep_count_oracle({n, c});
            if (f != o) return {false, str("m=", m, " n=", n, " formula=", f, " oracle=", o)};
            ++checked;
        }
    }
    return {true, str(checked, " (m, case) pairs")};
}

Verdict spot_values() {
    const std::pair<RepQuery, std::int64_t> expected[] = {
        {{1, Restriction::none}, 4},    {{2, Restriction::none}, 8},      {{4, Restriction::none}, 24},
        {{4, Restriction::case_i}, 4},  {{8, Restriction::case_ii}, 16},  {{4, Restriction::case_iii}, 16},
    };
    for (const auto& [q, value] : expected) {
        const std::int64_t o = rep_count_oracle(q);
        const std::int64_t f = q.restriction == Restriction::none ? rep_count_formula(q.n).formula_count
                                                                  : complementary_count_formula(1, q.restriction);
        if (o != value || f != value) return {false, str("n=", q.n, " oracle=", o, " formula=", f, " want ", value)};
    }
    return {true, "r(1)=4 r(2)=8 r(4)=24; m=1: i=4 ii=16 iii=16"};
}

Verdict primary_count() {
    for (std::int64_t m = 1; m <= 99; m += 2) {
        const std::int64_t e = count_primary_enum(m);
        if (e != sigma(m)) return {false, str("m=", m, " enumerated=", e, " sigma=", sigma(m))};
    }
    return {true, "odd m <= 99"};
}

Verdict primitive_count() {
    std::vector<std::int64_t> q(100, 0);
    for (std::int64_t m = 1; m <= 99; m += 2) {
        q[std::size_t(m)] = count_primitive_enum(m);
        if (q[std::size_t(m)] != q_formula(m))
            return {false, str("m=", m, " enumerated=", q[std::size_t(m)], " formula=", q_formula(m))};
    }
    int pairs = 0;
    for (std::int64_t a = 1; a <= 99; a += 2)
        for (std::int64_t b = a; b <= 99; b += 2) {
            if (std::gcd(a, b) != 1) continue;
            if (q_formula(a * b) != q_formula(a) * q_formula(b)) return {false, str("Q(", a, "*", b, ") not multiplicative")};
            if (a * b <= 99 && q[std::size_t(a * b)] != q[std::size_t(a)] * q[std::size_t(b)])
                return {false, str("enumerated Q(", a, "*", b, ") not multiplicative")};
            ++pairs;
        }
    return {true, str("odd m <= 99, ", pairs, " coprime pairs")};
}

Verdict units_criterion() {
    std::set<OrderElement> found;
    for (std::int64_t a = -2; a <= 2; ++a)
        for (std::int64_t b = -2; b <= 2; ++b)
            for (std::int64_t c = -2; c <= 2; ++c)
                for (std::int64_t d = -2; d <= 2; ++d) {
                    const HalfCoords h{a, b, c, d};
                    if (satisfies_parity(h) && a * a + b * b + 2 * c * c + 2 * d * d == 4) found.insert(from_half(h));
                }
    using basis::one, basis::i, basis::v3, basis::v4;
    const OrderElement listed[] = {one,    i,       v3,       v4,           v3 - one,     v3 - i,
                                   v4 - v3, v4 - one, v4 - i, v3 - i - one, v4 - i - one, v4 + v3 - i - one};
    std::set<OrderElement> listing;
    for (const auto& u : listed) {
        listing.insert(u);
        listing.insert(-u);
    }
    if (found.size() != 24 || found != listing) return {false, str(found.size(), " norm-1 elements found")};
    if (std::set<OrderElement>(units().begin(), units().end()) != listing) return {false, "units() differs from listing"};
    const auto in_h0 = std::count_if(found.begin(), found.end(), [](const auto& u) { return is_in_H0(u); });
    const auto shifted = std::count_if(found.begin(), found.end(),
                                       [](const auto& u) { return is_in_H0(basis::one_plus_i * u); });
    if (in_h0 != 4 || shifted != 8) return {false, str(in_h0, " in H0, ", shifted, " with (1+i)u in H0")};
    return {true, "24 units, 4 in H0, 8 with (1+i)u in H0"};
}

Verdict correspondence() {
    {
        const RSParams p = solve_rs(3);
        std::set<std::array<std::int64_t, 4>> images;
        std::vector<ResidueElement> all;
        for_each_residue(3, [&](const ResidueElement& x) { all.push_back(x); });
        for (const auto& a : all) {
            const MatrixModM ta = tau(a, p);
            images.insert({ta.alpha, ta.beta, ta.gamma, ta.delta});
            if (tau_inv(ta, p) != a) return {false, "m=3 round trip"};
            if (det(ta) != norm_mod(a)) return {false, "m=3 det != norm"};
            for (const auto& b : all)
                if (tau(a + b, p) != ta + tau(b, p) || tau(a * b, p) != ta * tau(b, p))
                    return {false, "m=3 homomorphism"};
        }
        if (images.size() != 81) return {false, "m=3 not bijective"};
    }
    for (std::int64_t m : {5, 7, 9}) {
        const RSParams p = solve_rs(m);
        auto rnd = [&] { return make_residue(m, uniform(0, m - 1), uniform(0, m - 1), uniform(0, m - 1), uniform(0, m - 1)); };
        for (int n = 0; n < 1000; ++n) {
            const ResidueElement a = rnd(), b = rnd();
            if (tau(a + b, p) != tau(a, p) + tau(b, p)) return {false, str("m=", m, " additivity")};
            if (tau(a * b, p) != tau(a, p) * tau(b, p)) return {false, str("m=", m, " multiplicativity")};
            if (tau_inv(tau(a, p), p) != a) return {false, str("m=", m, " bijectivity")};
            if (det(tau(a, p)) != norm_mod(a)) return {false, str("m=", m, " det != norm")};
        }
    }
    if (count_psi(3) != 32 || count_psi(5) != 144) return {false, "psi(3), psi(5)"};
    for (std::int64_t m : {3, 5, 9, 15}) {
        if (count_psi_enum(m) != count_psi(m)) return {false, str("psi(", m, ")")};
        if (count_norm1_enum(m) != count_norm1(m)) return {false, str("norm-1 count at ", m)};
    }
    return {true, "m=3 exhaustive, m=5,7,9 random; psi and norm-1 counts at 3,5,9,15"};
}

Verdict prime_counts() {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        const auto n = primary_primes_of_norm(p).size();
        if (std::int64_t(n) != p + 1) return {false, str(n, " primary primes of norm ", p)};
    }
    for (std::int64_t p : {3, 5}) {
        const auto all = enumerate_norm_solutions(p, Module::H);
        if (std::int64_t(all.size()) != 24 * (p + 1)) return {false, str(all.size(), " primes of norm ", p)};
    }
    int tried = 0;
    bool ok = true;
    for_each_residue(3, [&](const ResidueElement& f) {
        if (!is_primitive_to_m(f) || norm_mod(f) != 0) return;
        ++tried;
        if (count_annihilator_enum(f, 3) != 9) ok = false;
    });
    if (!ok || tried == 0) return {false, "annihilator count at p=3"};
    return {true, str("p+1 and 24(p+1) hold; ", tried, " annihilators of size 9 at p=3")};
}

Verdict factorization() {
    for (int n = 0; n < 500;) {
        const OrderElement x = random_nonzero(600);
        if (norm(x) > 1'000'000) continue;
        ++n;
        const Factorization f = full_factor(x);
        if (reassemble(f) != x) return {false, str("reassembly failed for ", format(x))};
        std::vector<std::int64_t> norms;
        for (const auto& pi : f.primes) {
            if (!primary(pi.element) || norm(pi.element) != pi.p || !is_prime(pi.p))
                return {false, str("bad prime in factorization of ", format(x))};
            norms.push_back(pi.p);
        }
        const std::int64_t rest = (norm(x) >> f.r) / (f.content * f.content);
        if (norms != prime_factors_with_multiplicity(rest)) return {false, str("prime norms of ", format(x))};
    }
    int primitives = 0;
    const std::int64_t forward[] = {3, 5}, backward[] = {5, 3};
    for (const auto& c : enumerate_norm_solutions(15, Module::H)) {
        if (!is_primitive(c)) continue;
        ++primitives;
        for (std::span<const std::int64_t> order : {std::span<const std::int64_t>(forward), std::span<const std::int64_t>(backward)}) {
            const auto ps = factor_primitive(c, order);
            OrderElement y = basis::one;
            for (const auto& pi : ps) y = y * pi.element;
            if (y != c) return {false, str("refactoring ", format(c))};
        }
    }
    if (primitives == 0) return {false, "no norm-15 primitives"};
    return {true, str("500 random elements; ", primitives, " norm-15 primitives in both orders")};
}

Verdict euclidean() {
    for (int n = 0; n < 10000; ++n) {
        const OrderElement a = random_element(5000), b = random_nonzero(200);
        const Side side = n % 2 == 0 ? Side::right : Side::left;
        const DivisionResult d = div_rem(a, b, side);
        if (!(norm(d.remainder) < norm(b)) || mul_on(side, d.quotient, b) + d.remainder != a)
            return {false, str("division ", format(a), " by ", format(b))};
    }
    for (int n = 0; n < 2000; ++n) {
        const OrderElement a = random_element(300), b = random_nonzero(300);
        for (Side side : {Side::left, Side::right}) {
            const GcdResult g = gcd(a, b, side);
            const auto& [x, y] = g.cofactors;
            if (mul_on(side, x, a) + mul_on(side, y, b) != g.gcd) return {false, "Bezout identity"};
            if (!divides(g.gcd, a, side) || !divides(g.gcd, b, side)) return {false, "gcd does not divide"};
        }
    }
    return {true, "10^4 divisions, 4000 gcds"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"representation formula", representation_formula},
        {"complementary representations", complementary},
        {"spot values", spot_values},
        {"primary count", primary_count},
        {"primitive count", primitive_count},
        {"units", units_criterion},
        {"correspondence", correspondence},
        {"prime counts", prime_counts},
        {"factorization soundness", factorization},
        {"euclidean layer", euclidean},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("%s  %2d  %-30s %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
