#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hquat/hquat.hpp"

namespace hquat::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine{0x5eed'1223ULL};
    return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>{lo, hi}(rng());
}

inline OrderElement random_element(std::int64_t bound) {
    return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)};
}

inline OrderElement random_nonzero(std::int64_t bound) {
    for (;;) {
        OrderElement e = random_element(bound);
        if (!e.is_zero()) return e;
    }
}

inline OrderElement random_odd(std::int64_t bound) {
    for (;;) {
        OrderElement e = random_element(bound);
        if (norm(e) % 2 != 0) return e;
    }
}

// Floating-point Hamilton product on (w, x, y, z) = (A, B, C sqrt2, D sqrt2)/2,
// mapped back to the v-basis by rounding.
inline OrderElement hamilton_reference(const OrderElement& a, const OrderElement& b) {
    const double r2 = std::sqrt(2.0);
    auto std_coords = [&](const OrderElement& e) {
        const double g1 = double(e.g[0]), g2 = double(e.g[1]), g3 = double(e.g[2]), g4 = double(e.g[3]);
        return std::array<double, 4>{g1 + (g3 + g4) / 2, g2 + (g3 + g4) / 2, g3 * r2 / 2, g4 * r2 / 2};
    };
    const auto p = std_coords(a), q = std_coords(b);
    const double w = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3];
    const double x = p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2];
    const double y = p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1];
    const double z = p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0];
    const auto g3 = std::llround(y * 2 / r2), g4 = std::llround(z * 2 / r2);
    const double half = double(g3 + g4) / 2;
    return {std::llround(w - half), std::llround(x - half), g3, g4};
}

}  // namespace hquat::testing
