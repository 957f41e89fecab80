#include "hquat/rep_count.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "hquat/dyadic.hpp"
#include "hquat/error.hpp"
#include "hquat/integer.hpp"
#include "hquat/prime_factor.hpp"

namespace hquat {
namespace {

void require_odd_positive(std::int64_t m, const char* what) {
    require(m >= 1 && m % 2 != 0, std::string(what) + ": argument must be odd and positive");
}

enum class PairParity { any, both_even, both_odd, first_odd_second_even, first_even_second_odd };

bool accepts(PairParity p, std::int64_t a, std::int64_t b) {
    const bool ao = (a & 1) != 0, bo = (b & 1) != 0;
    switch (p) {
        case PairParity::any: return true;
        case PairParity::both_even: return !ao && !bo;
        case PairParity::both_odd: return ao && bo;
        case PairParity::first_odd_second_even: return ao && !bo;
        case PairParity::first_even_second_odd: return !ao && bo;
    }
    return false;
}

// counts[k] = #{(a, b) : a^2 + b^2 = k, parity accepted} for k <= limit.
std::vector<std::int64_t> tally_pairs(std::int64_t limit, PairParity parity, unsigned workers) {
    const std::int64_t amax = isqrt(limit);
    auto run = [&](std::int64_t lo, std::int64_t hi, std::vector<std::int64_t>& out) {
        for (std::int64_t a = lo; a < hi; ++a) {
            const std::int64_t rest = limit - a * a;
            const std::int64_t bmax = isqrt(rest);
            for (std::int64_t b = -bmax; b <= bmax; ++b)
                if (accepts(parity, a, b)) ++out[static_cast<std::size_t>(a * a + b * b)];
        }
    };
    const std::size_t size = static_cast<std::size_t>(limit) + 1;
    workers = std::max(1U, workers);
    std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(size, 0));
    const std::int64_t span = 2 * amax + 1;
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t lo = -amax + span * w / workers;
        const std::int64_t hi = -amax + span * (w + 1) / workers;
        if (workers == 1) {
            run(lo, hi, partial[w]);
        } else {
            threads.emplace_back(run, lo, hi, std::ref(partial[w]));
        }
    }
    for (auto& t : threads) t.join();
    std::vector<std::int64_t> total(size, 0);
    for (const auto& p : partial)
        for (std::size_t k = 0; k < size; ++k) total[k] += p[k];
    return total;
}

// Solutions of (x^2 + y^2) + 2 (z^2 + w^2) = n.
std::int64_t convolve(std::int64_t n, PairParity xy, PairParity zw, unsigned workers) {
    const auto rxy = tally_pairs(n, xy, workers);
    const auto rzw = tally_pairs(n / 2, zw, workers);
    std::int64_t total = 0;
    for (std::int64_t j = 0; 2 * j <= n; ++j)
        total += rzw[static_cast<std::size_t>(j)] * rxy[static_cast<std::size_t>(n - 2 * j)];
    return total;
}

}  // namespace

std::int64_t sigma(std::int64_t m) {
    require(m >= 1, "sigma: argument must be positive");
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= m / d; ++d) {
        if (m % d != 0) continue;
        s += d;
        if (d != m / d) s += m / d;
    }
    return s;
}

std::int64_t q_formula(std::int64_t m) {
    require_odd_positive(m, "q_formula");
    std::int64_t total = 1;
    for (const auto& [p, k] : factorize(m)) {
        std::int64_t f = p + 1;
        for (int n = 1; n < k; ++n) f *= p;
        total = checked::mul(total, f);
    }
    return total;
}

std::int64_t count_primitive_enum(std::int64_t m) {
    require_odd_positive(m, "count_primitive_enum");
    const auto sols = enumerate_norm_solutions(m, Module::H);
    return std::count_if(sols.begin(), sols.end(), [](const OrderElement& e) { return is_primitive(e); });
}

std::int64_t count_primary_enum(std::int64_t m) {
    require_odd_positive(m, "count_primary_enum");
    const auto sols = enumerate_norm_solutions(m, Module::H);
    return std::count_if(sols.begin(), sols.end(), [](const OrderElement& e) { return primary(e); });
}

CountResult rep_count_formula(std::int64_t n) {
    require(n >= 1, "rep_count_formula: n must be positive");
    CountResult c;
    c.r = two_adic_valuation(n);
    c.m = n >> c.r;
    const std::int64_t factor = c.r == 0 ? 4 : c.r == 1 ? 8 : 24;
    c.formula_count = checked::mul(factor, sigma(c.m));
    return c;
}

std::int64_t complementary_n(std::int64_t m, Restriction c) {
    require_odd_positive(m, "complementary_n");
    switch (c) {
        case Restriction::case_i:
        case Restriction::case_iii: return checked::mul(4, m);
        case Restriction::case_ii: return checked::mul(8, m);
        case Restriction::none: break;
    }
    throw InvalidArgument("complementary_n: restriction must be case i, ii or iii");
}

void validate(const RepQuery& q) {
    require(q.n >= 1, "representation count: n must be positive");
    if (q.restriction == Restriction::none) return;
    const std::int64_t k = q.restriction == Restriction::case_ii ? 8 : 4;
    require(q.n % k == 0 && (q.n / k) % 2 != 0,
            "representation count: restriction requires n = " + std::to_string(k) + "m with m odd");
}

std::int64_t rep_count_oracle(const RepQuery& q, std::int64_t bound, unsigned workers) {
    validate(q);
    require(q.n <= bound, "rep_count_oracle: n exceeds the oracle bound " + std::to_string(bound));
    switch (q.restriction) {
        case Restriction::none: return convolve(q.n, PairParity::any, PairParity::any, workers);
        case Restriction::case_i:
        case Restriction::case_ii: return convolve(q.n, PairParity::both_even, PairParity::both_odd, workers);
        case Restriction::case_iii:
            return convolve(q.n, PairParity::both_odd, PairParity::first_odd_second_even, workers) +
                   convolve(q.n, PairParity::both_odd, PairParity::first_even_second_odd, workers);
    }
    throw InvariantViolation("rep_count_oracle: unknown restriction");
}

std::pair<std::int64_t, std::int64_t> rep_count_oracle_iii_split(std::int64_t m, std::int64_t bound) {
    const std::int64_t n = complementary_n(m, Restriction::case_iii);
    require(n <= bound, "rep_count_oracle_iii_split: n exceeds the oracle bound");
    return {convolve(n, PairParity::both_odd, PairParity::first_odd_second_even, 1),
            convolve(n, PairParity::both_odd, PairParity::first_even_second_odd, 1)};
}

std::int64_t complementary_count_formula(std::int64_t m, Restriction c) {
    require_odd_positive(m, "complementary_count_formula");
    switch (c) {
        case Restriction::case_i: return checked::mul(4, sigma(m));
        case Restriction::case_ii:
        case Restriction::case_iii: return checked::mul(16, sigma(m));
        case Restriction::none: break;
    }
    throw InvalidArgument("complementary_count_formula: restriction must be case i, ii or iii");
}

std::vector<OrderElement> enumerate_norm_solutions(std::int64_t n, Module module, std::int64_t bound) {
    require(n >= 0, "enumerate_norm_solutions: negative norm");
    require(n <= bound, "enumerate_norm_solutions: n exceeds the bound " + std::to_string(bound));
    // Half coordinates: A^2 + B^2 + 2C^2 + 2D^2 = 4n.
    const std::int64_t target = 4 * n;
    const std::int64_t step = module == Module::H0 ? 2 : 1;
    const auto start = [step](std::int64_t lim) { return step == 2 ? -(lim - (lim & 1)) : -lim; };
    std::vector<OrderElement> out;
    const std::int64_t amax = isqrt(target);
    for (std::int64_t a = start(amax); a <= amax; a += step) {
        const std::int64_t ra = target - a * a;
        const std::int64_t bmax = isqrt(ra);
        for (std::int64_t b = start(bmax); b <= bmax; b += step) {
            if (((a - b) & 1) != 0) continue;
            const std::int64_t rb = ra - b * b;
            if (rb % 2 != 0) continue;
            const std::int64_t half = rb / 2;  // C^2 + D^2
            const std::int64_t cmax = isqrt(half);
            for (std::int64_t c = start(cmax); c <= cmax; c += step) {
                const std::int64_t d2 = half - c * c;
                const std::int64_t d = isqrt(d2);
                if (d * d != d2) continue;
                if (step == 2 && (d & 1) != 0) continue;
                for (std::int64_t dd : {d, -d}) {
                    const HalfCoords h{a, b, c, dd};
                    if (satisfies_parity(h)) out.push_back(from_half(h));
                    if (d == 0) break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hquat
