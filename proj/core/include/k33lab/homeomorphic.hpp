#pragma once

#include <vector>

#include <k33lab/graph.hpp>

namespace k33lab
{

// Result of suppressing degree-2 vertices and merging parallel edges.
struct CoreResult {
    // G reduced to a single edge: it is series-parallel.
    bool series_parallel = false;
    // The core, relabelled 0.. in increasing original label order.
    Graph core;
    // original_labels[v] is the label in G of core vertex v.
    std::vector<int> original_labels;
};

// Homeomorphically irreducible core of a 2-connected graph.
CoreResult hi_core(const Graph &g);

// 2-connected and without a K4 subdivision.
bool is_series_parallel(const Graph &g);

} // namespace k33lab
