#pragma once

// Rational-integer helpers shared by the quaternion layers.

#include <cstdint>
#include <utility>
#include <vector>

namespace hquat {

// Least nonnegative residue; m > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

// Floor of the square root for n >= 0.
std::int64_t isqrt(std::int64_t n);

bool is_prime(std::int64_t n);

// Prime factorization by trial division as (prime, exponent) pairs, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Primes of n with multiplicity, ascending.
std::vector<std::int64_t> prime_factors_with_multiplicity(std::int64_t n);

// Exponent of 2 in n != 0.
int two_adic_valuation(std::int64_t n);

}  // namespace hquat
