#include <benchmark/benchmark.h>

#include <k33lab/projective_enum.hpp>
#include <k33lab/series.hpp>
#include <k33lab/series_parallel.hpp>

using namespace k33lab;

static void BM_SeriesMul(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const BivarSeries r = compute_R(order);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(r, r));
    }
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(12)->Arg(16);

static void BM_ComposeY(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    const BivarSeries r = compute_R(order);
    const BivarSeries f = K5_series();
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose_y(f, r.truncated(order)));
    }
}
BENCHMARK(BM_ComposeY)->Arg(6)->Arg(10);

static void BM_ComputeR(benchmark::State &state)
{
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_R(order));
    }
}
BENCHMARK(BM_ComputeR)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
