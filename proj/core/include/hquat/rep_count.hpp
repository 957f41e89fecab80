#pragma once

// Counting elements of given norm and representations by the form
// x^2 + y^2 + 2z^2 + 2w^2, closed formulas next to a brute-force oracle.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hquat/quat.hpp"

namespace hquat {

// Parity restrictions on (x, y, z, w) for the complementary counts:
//   case_i    n = 4m: x, y even; z, w odd
//   case_ii   n = 8m: x, y even; z, w odd
//   case_iii  n = 4m: x, y odd;  z, w of different parity
enum class Restriction { none, case_i, case_ii, case_iii };

struct RepQuery {
    std::int64_t n = 1;
    Restriction restriction = Restriction::none;
};

struct CountResult {
    std::int64_t formula_count = 0;
    std::optional<std::int64_t> oracle_count;
    int r = 0;             // n = 2^r * m
    std::int64_t m = 1;
};

inline constexpr std::int64_t kDefaultOracleBound = 1'000'000;

std::int64_t sigma(std::int64_t m);

// m * prod (1 + 1/p) over primes p | m, with q_formula(1) = 1. m odd.
std::int64_t q_formula(std::int64_t m);

// Elements of norm m that are primitive (primary, coordinate gcd 1). m odd.
std::int64_t count_primitive_enum(std::int64_t m);

// Elements of norm m that are primary. m odd.
std::int64_t count_primary_enum(std::int64_t m);

// 4 sigma(m), 8 sigma(m) or 24 sigma(m) for r = 0, 1, >= 2. n >= 1.
CountResult rep_count_formula(std::int64_t n);

// Throws InvalidArgument unless the query's n fits its restriction.
void validate(const RepQuery& q);

/// Ordered signed integer solutions of x^2+y^2+2z^2+2w^2 = n under the
/// restriction, by exhaustive tallying of x^2+y^2 and z^2+w^2. The x-range
/// may be split across `workers` threads. Throws InvalidArgument when
/// n > bound.
std::int64_t rep_count_oracle(const RepQuery& q, std::int64_t bound = kDefaultOracleBound, unsigned workers = 1);

// Case iii split into (z odd, w even) and (z even, w odd) at n = 4m.
std::pair<std::int64_t, std::int64_t> rep_count_oracle_iii_split(std::int64_t m,
                                                                 std::int64_t bound = kDefaultOracleBound);

// 4 sigma(m) at n = 4m, 16 sigma(m) at n = 8m, 16 sigma(m) at n = 4m. m odd.
std::int64_t complementary_count_formula(std::int64_t m, Restriction c);

// n for a complementary case: 4m, 8m or 4m.
std::int64_t complementary_n(std::int64_t m, Restriction c);

enum class Module { H, H0 };

// Elements of the chosen module with norm n, sorted by v-coordinates.
std::vector<OrderElement> enumerate_norm_solutions(std::int64_t n, Module module,
                                                   std::int64_t bound = kDefaultOracleBound);

}  // namespace hquat
