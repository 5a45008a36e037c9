#pragma once

#include <k33lab/graph.hpp>

namespace k33lab
{

// True iff G has six disjoint connected branch sets A1..A3, B1..B3 with every
// Ai adjacent to every Bj.
bool has_K33_minor(const Graph &g);

// True iff the six given vertices split 3 + 3 with all nine cross edges present.
bool contains_K33_on(const Graph &g, VertexMask six);

} // namespace k33lab
