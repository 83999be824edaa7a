#include <benchmark/benchmark.h>

#include "ncsurf/classify.hpp"
#include "ncsurf/ncalgebra.hpp"

using namespace ncsurf;

// Enumeration: OpenMP kernel screen vs the serial GMP reference.
static void BM_enumerate_parallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const long bound = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_solutions(n, bound));
    }
}

static void BM_enumerate_serial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const long bound = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_solutions_serial(n, bound));
    }
}

BENCHMARK(BM_enumerate_parallel)->Args({3, 20})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Args({3, 20})->Args({4, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_capped_orbit(benchmark::State& state)
{
    const GramMatrix root = state.range(0) < 0 ? gram_quadric() : gram_family(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(CappedOrbit(root, SearchParams{}).size());
    }
}

BENCHMARK(BM_capped_orbit)->Arg(-1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
