#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <k33lab/decomposition.hpp>
#include <k33lab/graph.hpp>
#include <k33lab/minors.hpp>
#include <k33lab/planarity.hpp>

using namespace k33lab;

namespace
{

std::vector<Graph> random_graphs(int n, double p, int count)
{
    std::mt19937_64 rng(42);
    std::bernoulli_distribution edge(p);
    std::vector<Graph> out;
    for (int k = 0; k < count; ++k) {
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (edge(rng)) {
                    g.add_edge(u, v);
                }
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

static void BM_Planarity(benchmark::State &state)
{
    const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.4, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_planar(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_Planarity)->Arg(8)->Arg(16);

static void BM_TwoConnected(benchmark::State &state)
{
    const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.4, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_two_connected(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_TwoConnected)->Arg(8)->Arg(16);

static void BM_K33Minor(benchmark::State &state)
{
    const auto graphs = random_graphs(static_cast<int>(state.range(0)), 0.3, 64);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(has_K33_minor(graphs[i++ % graphs.size()]));
    }
}
BENCHMARK(BM_K33Minor)->Arg(8)->Arg(12)->Arg(16);

static void BM_DecomposeK5(benchmark::State &state)
{
    const Graph g = Graph::complete(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(g));
    }
}
BENCHMARK(BM_DecomposeK5);
