#include <benchmark/benchmark.h>

#include "semicircle_lab/ensembles.hpp"
#include "semicircle_lab/rng.hpp"

using namespace semicircle_lab;

static void BM_Philox(benchmark::State& state)
{
    std::uint32_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(philox4x32({i++, 1, 2, 3}, {4, 5}));
    }
}
BENCHMARK(BM_Philox);

static void BM_Sample(benchmark::State& state)
{
    const auto kind = static_cast<EnsembleKind>(state.range(0));
    const double delta = kind == EnsembleKind::dependent ? 0.5 : 0.0;
    const auto spec = make_spec(kind, 1024, {ProfileRecipe::Type::smooth, 0.5}, delta, 0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(spec.with_seed(seed++)));
    }
    state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Sample)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
