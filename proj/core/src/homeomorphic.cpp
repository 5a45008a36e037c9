#include <k33lab/homeomorphic.hpp>

#include <k33lab/errors.hpp>

#include "reduction.hpp"

namespace k33lab
{

CoreResult hi_core(const Graph &g)
{
    if (!is_two_connected(g)) {
        throw InputError("hi_core needs a 2-connected graph");
    }
    detail::Rows rows{};
    for (int v = 0; v < g.n(); ++v) {
        rows[v] = g.neighbors(v);
    }
    // In a 2-connected multigraph suppression never creates a degree-1 vertex
    // until only a single edge is left, which is then deleted as well.
    const VertexMask alive = detail::suppress_low_degree(rows, g.all_vertices());
    CoreResult out;
    if (popcount(alive) < 3) {
        out.series_parallel = true;
        return out;
    }
    for_each_vertex(alive, [&](int v) { out.original_labels.push_back(v); });
    Graph core(static_cast<int>(out.original_labels.size()));
    for (std::size_t i = 0; i < out.original_labels.size(); ++i) {
        for (std::size_t j = i + 1; j < out.original_labels.size(); ++j) {
            if ((rows[out.original_labels[i]] >> out.original_labels[j]) & 1U) {
                core.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    out.core = std::move(core);
    return out;
}

bool is_series_parallel(const Graph &g)
{
    return is_two_connected(g) && hi_core(g).series_parallel;
}

} // namespace k33lab
