#include "hquat/integer.hpp"

#include <numeric>

#include "hquat/error.hpp"

namespace hquat {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    require(m > 0, "floor_mod: modulus must be positive");
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    require(m > 0, "inverse_mod: modulus must be positive");
    if (m == 1) return 0;
    // Extended Euclid on (a mod m, m).
    std::int64_t old_r = floor_mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    require(old_r == 1, "inverse_mod: argument not invertible");
    return floor_mod(old_s, m);
}

std::int64_t isqrt(std::int64_t n) {
    require(n >= 0, "isqrt: negative argument");
    auto r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    require(n >= 1, "factorize: argument must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> prime_factors_with_multiplicity(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (const auto& [p, e] : factorize(n))
        for (int i = 0; i < e; ++i) out.push_back(p);
    return out;
}

int two_adic_valuation(std::int64_t n) {
    require(n != 0, "two_adic_valuation: zero argument");
    return __builtin_ctzll(static_cast<unsigned long long>(n));
}

}  // namespace hquat
