#include <benchmark/benchmark.h>

#include "semicircle_lab/ensembles.hpp"
#include "semicircle_lab/moment_graphs.hpp"

using namespace semicircle_lab;

static void BM_Enumerate(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphs::enumerate_canonical(static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_ExactMoment(benchmark::State& state)
{
    const auto profile = profile_smooth(static_cast<std::size_t>(state.range(0)), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphs::gaussian_moment_exact(profile, 6));
    }
}
BENCHMARK(BM_ExactMoment)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_WickOracle(benchmark::State& state)
{
    const auto profile = profile_smooth(static_cast<std::size_t>(state.range(0)), 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(graphs::wick_moment_oracle(profile, 6));
    }
}
BENCHMARK(BM_WickOracle)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
