#pragma once

#include <array>
#include <optional>
#include <vector>

#include <k33lab/graph.hpp>

namespace k33lab
{

// Pair index 0..9 for corner positions i < j < 5, in lexicographic order.
int corner_pair_index(int i, int j);
std::pair<int, int> corner_pair(int index);

// A subdivision of K5 inside some graph. corners are sorted; sides[corner_pair_index(i, j)]
// runs from corners[i] to corners[j] and includes both ends.
struct K5Subdivision {
    std::array<int, 5> corners{};
    std::array<std::vector<int>, 10> sides;

    VertexMask vertices() const;
    VertexMask inner_vertices() const;
    std::vector<Edge> edges() const;
    // Checks the sides against G: real edges, internally disjoint, no corner inside a side.
    bool is_valid_in(const Graph &g) const;
};

// Inputs larger than this go only through the minimal-subgraph route.
inline constexpr int kCornerSearchLimit = 20;

// An edge-minimal non-planar subgraph of G (a subdivision of K5 or K3,3), as
// an edge list. Requires non-planar G.
std::vector<Edge> kuratowski_subgraph(const Graph &g);

// Some TK5 in G, if there is one. The minimal non-planar subgraph is tried
// first; if it is a TK3,3, corner 5-sets are searched by backtracking
// over disjoint sides, which throws SizeLimitError above kCornerSearchLimit.
std::optional<K5Subdivision> find_K5_subdivision(const Graph &g);

// A TK5 with the given corners, if the ten sides can be routed disjointly.
std::optional<K5Subdivision> find_K5_subdivision_with_corners(const Graph &g, const std::array<int, 5> &corners);

// A path from an inner vertex of one side to a vertex of T off that side,
// with every other vertex and edge outside T. Returned endpoint first.
std::optional<std::vector<int>> find_shortcut(const Graph &g, const K5Subdivision &t);

// A vertex outside T joined to three or more distinct corners by paths that
// are disjoint apart from it and avoid T otherwise.
std::optional<int> find_three_corner_vertex(const Graph &g, const K5Subdivision &t);

} // namespace k33lab
