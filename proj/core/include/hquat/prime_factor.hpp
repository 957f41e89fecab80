#pragma once

// Prime elements and unique factorization of primitive elements into primary
// primes.

#include <cstdint>
#include <span>
#include <vector>

#include "hquat/quat.hpp"

namespace hquat {

// A prime element with its norm p. Primary whenever p is odd; for p = 2 the
// canonical representative is 1+i.
struct PrimaryPrime {
    OrderElement element;
    std::int64_t p = 0;

    friend bool operator==(const PrimaryPrime&, const PrimaryPrime&) = default;
};

// x = (1+i)^r * unit * sign * content * primes[0] * primes[1] * ...
// The unit is one of the twelve positive units; sign carries the remaining -1.
struct Factorization {
    int r = 0;
    OrderElement unit = basis::one;
    int sign = 1;
    std::int64_t content = 1;
    std::vector<PrimaryPrime> primes;
};

// norm(e) is a rational prime.
bool is_prime_quat(const OrderElement& e);

/// Element congruent to f modulo p whose norm is divisible by p exactly once.
/// Returns f itself when it already qualifies; otherwise adds p*t*v_n for the
/// first coordinate n whose coefficient in the linearized norm is a unit mod p.
/// Requires p an odd prime, f primitive to p and p | norm(f).
OrderElement lift_nondegenerate(const OrderElement& f, std::int64_t p);

/// The primary prime of norm p attached to f: primary right gcd of the
/// nondegenerate lift of f and p. Same preconditions as lift_nondegenerate.
PrimaryPrime primary_prime_from(const OrderElement& f, std::int64_t p);

// conjugate(pi) when pi = 1 mod 2(1+i), -conjugate(pi) when pi = 1+2v3.
PrimaryPrime p_conjugate(const PrimaryPrime& pi);

// The p+1 primary primes of norm p, sorted by v-coordinates. p odd prime.
std::vector<PrimaryPrime> primary_primes_of_norm(std::int64_t p);

// Every element of norm p (odd prime or 2), sorted by v-coordinates.
std::vector<OrderElement> primes_of_norm(std::int64_t p);

// The 24 associates (1+i)*u, i.e. all primes of norm 2, sorted.
std::vector<OrderElement> primes_over_two();

// Primary with coordinate gcd 1.
bool is_primitive(const OrderElement& c);

/// Splits a primitive element of odd norm as pi_1 * pi_2 * ... with
/// norm(pi_n) = prime_order[n], peeling primary left gcds with each prime.
/// prime_order must multiply to norm(c).
std::vector<PrimaryPrime> factor_primitive(const OrderElement& c, std::span<const std::int64_t> prime_order);

// Full decomposition with primes grouped by ascending norm. x != 0.
Factorization full_factor(const OrderElement& x);

// Multiplies a factorization back out.
OrderElement reassemble(const Factorization& f);

}  // namespace hquat
