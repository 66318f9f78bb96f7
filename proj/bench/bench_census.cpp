#include "wonderful/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace wonderful;

static void BM_CensusSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nest_census_serial(n));
}

static void BM_CensusParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nest_census_parallel(n));
}

BENCHMARK(BM_CensusSerial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
