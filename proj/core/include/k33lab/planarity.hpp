#pragma once

#include <k33lab/graph.hpp>

namespace k33lab
{

// Exact planarity decision.
bool is_planar(const Graph &g);

// Same, on a bare adjacency array (rows[v] is the neighbour mask of v, v < n).
bool is_planar_rows(const VertexMask *rows, int n);

} // namespace k33lab
