#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace k33lab
{

using VertexMask = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr VertexMask bit(int v) noexcept
{
    return VertexMask{1} << v;
}

// Vertices with a label strictly greater than v.
inline constexpr VertexMask above(int v) noexcept
{
    return v >= 63 ? VertexMask{0} : ~((VertexMask{1} << (v + 1)) - 1);
}

inline int popcount(VertexMask m) noexcept
{
    return std::popcount(m);
}

// Iterates the set bits of a mask, lowest first.
template <typename F>
void for_each_vertex(VertexMask mask, F &&f)
{
    while (mask != 0) {
        const int v = std::countr_zero(mask);
        mask &= mask - 1;
        f(v);
    }
}

// Simple labelled graph on {0, ..., n-1}, stored as adjacency bitsets.
class Graph
{
public:
    static constexpr int kMaxVertices = 64;

    explicit Graph(int n = 0);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph complete_bipartite(int a, int b);

    int n() const noexcept
    {
        return static_cast<int>(adj_.size());
    }
    int m() const noexcept
    {
        return m_;
    }
    VertexMask all_vertices() const noexcept
    {
        return n() == 64 ? ~VertexMask{0} : bit(n()) - 1;
    }
    VertexMask neighbors(int v) const
    {
        return adj_[v];
    }
    int degree(int v) const
    {
        return popcount(adj_[v]);
    }
    int min_degree() const;
    bool has_edge(int u, int v) const
    {
        return (adj_[u] >> v) & 1U;
    }

    // Returns false when the edge was already present. Loops and bad labels throw.
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);

    std::vector<Edge> edges() const;

    // Subgraph induced by `vertices`, relabelled 0.. in the given order.
    Graph induced(std::span<const int> vertices) const;
    // Image under a relabelling: vertex v becomes perm[v].
    Graph relabelled(std::span<const int> perm) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexMask> adj_;
    int m_ = 0;
};

// Connectivity helpers restricted to the vertices in `within`.
VertexMask reachable_from(const Graph &g, int source, VertexMask within);
bool is_connected(const Graph &g);
std::vector<VertexMask> connected_components(const Graph &g, VertexMask within);

// K2 counts as 2-connected. K1 and the empty graph do not.
bool is_two_connected(const Graph &g);

// 2-connectivity on a bare adjacency array; used by the exhaustive oracles.
bool is_two_connected_rows(const VertexMask *rows, int n) noexcept;

// Two-pole network: local vertex 0 is pole 0, vertex 1 is pole 1, vertices
// 2.. are internal. `internal_labels[i]` is the global label of local vertex
// i + 2, used when the network is substituted into a core graph.
struct Network {
    Graph graph;
    std::vector<int> internal_labels;

    static Network bare_edge();
    // 0 - a - 1, with the internal vertex labelled `label`.
    static Network path(int label);

    int internal_count() const
    {
        return graph.n() - 2;
    }
    bool has_pole_edge() const
    {
        return graph.has_edge(0, 1);
    }
    // N u 01.
    Graph closure() const;
    // Connected, with N u 01 2-connected.
    bool is_valid() const;
    // N u 01 planar.
    bool is_strongly_planar() const;
    // tau: interchange the poles.
    Network swapped() const;

    // Edge set with local vertices mapped to global labels (poles to the given corners).
    std::vector<Edge> global_edges(int pole0_label, int pole1_label) const;
};

} // namespace k33lab
