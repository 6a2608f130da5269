#include <benchmark/benchmark.h>

#include "semicircle_lab/eigensolver.hpp"
#include "semicircle_lab/ensembles.hpp"

using namespace semicircle_lab;

static void BM_Eigenvalues(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = sample(make_spec(EnsembleKind::gaussian, n, {}, 0.0, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvalues(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

static void BM_Tridiagonalize(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = sample(make_spec(EnsembleKind::gaussian, n, {}, 0.0, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(tridiagonalize(m));
    }
}
BENCHMARK(BM_Tridiagonalize)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_EigenDecompose(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = sample(make_spec(EnsembleKind::gaussian, n, {}, 0.0, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigen_decompose(m));
    }
}
BENCHMARK(BM_EigenDecompose)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
