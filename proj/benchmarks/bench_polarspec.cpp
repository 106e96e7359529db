#include "polarspec/constructions.hpp"
#include "polarspec/oracle.hpp"
#include "polarspec/polar_core.hpp"
#include "polarspec/pretransform.hpp"
#include "polarspec/scl_collector.hpp"
#include "polarspec/spectrum.hpp"

#include <benchmark/benchmark.h>

using namespace polarspec;

static void BM_AvgSpectrumFullRange(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto config = construct_rm(n, n / 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(avg_spectrum(config, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AvgSpectrumFullRange)->RangeMultiplier(2)->Range(32, 512)->Unit(benchmark::kMillisecond)->Complexity();

static void BM_AvgNmin(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto config = construct_rm(n, n / 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(avg_nmin(config));
}
BENCHMARK(BM_AvgNmin)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMicrosecond);

static void BM_PolarTransform(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    BitRow x(n);
    for (std::size_t i = 1; i <= n; i += 3)
        x.set(i);
    for (auto _ : state) {
        polar_transform(x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_PolarTransform)->RangeMultiplier(4)->Range(64, 4096);

static void BM_ExactSpectrum(benchmark::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    const auto config = construct_pw(64, k);
    const auto t = random_transform(config, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_spectrum(config, t));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << k));
}
BENCHMARK(BM_ExactSpectrum)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_CollectLowWeight(benchmark::State& state)
{
    const auto config = construct_rm(128, 64);
    const auto t = random_transform(config, 1);
    const auto list = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(collect_low_weight(config, t, list));
}
BENCHMARK(BM_CollectLowWeight)->Arg(256)->Arg(1024)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
