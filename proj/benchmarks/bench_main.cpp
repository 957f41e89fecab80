#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hquat/hquat.hpp"

using namespace hquat;

namespace {

std::vector<OrderElement> sample(std::size_t count, std::int64_t bound) {
    std::mt19937_64 rng{42};
    std::uniform_int_distribution<std::int64_t> d{-bound, bound};
    std::vector<OrderElement> out;
    while (out.size() < count) {
        OrderElement e{d(rng), d(rng), d(rng), d(rng)};
        if (!e.is_zero()) out.push_back(e);
    }
    return out;
}

void BM_Multiply(benchmark::State& state) {
    const auto xs = sample(1024, 1000);
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[k % 1024] * xs[(k + 1) % 1024]);
        ++k;
    }
}
BENCHMARK(BM_Multiply);

void BM_DivRem(benchmark::State& state) {
    const auto xs = sample(1024, state.range(0));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(div_rem(xs[k % 1024], xs[(k + 7) % 1024], Side::right));
        ++k;
    }
}
BENCHMARK(BM_DivRem)->Arg(100)->Arg(10000);

void BM_Gcd(benchmark::State& state) {
    const auto xs = sample(1024, state.range(0));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gcd(xs[k % 1024], xs[(k + 3) % 1024], Side::left));
        ++k;
    }
}
BENCHMARK(BM_Gcd)->Arg(100)->Arg(10000);

void BM_FullFactor(benchmark::State& state) {
    auto xs = sample(4096, 500);
    std::erase_if(xs, [](const OrderElement& e) { return norm(e) > 1'000'000; });
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_factor(xs[k % xs.size()]));
        ++k;
    }
}
BENCHMARK(BM_FullFactor);

void BM_RepCountOracle(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(rep_count_oracle({state.range(0), Restriction::none}));
}
BENCHMARK(BM_RepCountOracle)->Arg(5000)->Arg(1'000'000);

void BM_TauRoundTrip(benchmark::State& state) {
    const std::int64_t m = state.range(0);
    const RSParams p = solve_rs(m);
    const auto xs = sample(1024, 1000);
    std::size_t k = 0;
    for (auto _ : state) {
        const ResidueElement q = reduce_mod_m(xs[k % 1024], m);
        benchmark::DoNotOptimize(tau_inv(tau(q, p), p));
        ++k;
    }
}
BENCHMARK(BM_TauRoundTrip)->Arg(15)->Arg(10007);

}  // namespace

BENCHMARK_MAIN();
