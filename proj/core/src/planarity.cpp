#include <k33lab/planarity.hpp>

#include <array>

#include "reduction.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace k33lab
{

namespace
{

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

} // namespace

bool is_planar_rows(const VertexMask *in, int n)
{
    detail::Rows rows{};
    for (int v = 0; v < n; ++v) {
        rows[v] = in[v];
    }
    const VertexMask alive = detail::suppress_low_degree(rows, n == 64 ? ~VertexMask{0} : bit(n) - 1);
    const int nr = popcount(alive);
    const int mr = detail::edge_count(rows, alive);
    // Kuratowski subgraphs have at least 9 edges; Euler bounds simple planar graphs by 3n - 6.
    if (nr <= 4 || mr <= 8) {
        return true;
    }
    if (mr > 3 * nr - 6) {
        return false;
    }
    if (nr == 5) {
        return true;
    }

    std::array<int, Graph::kMaxVertices> index{};
    int next = 0;
    for_each_vertex(alive, [&](int v) { index[v] = next++; });
    BoostGraph bg(nr);
    int edge_id = 0;
    for_each_vertex(alive, [&](int u) {
        for_each_vertex(rows[u] & alive & above(u), [&](int v) {
            auto e = boost::add_edge(index[u], index[v], bg).first;
            boost::put(boost::edge_index, bg, e, edge_id++);
        });
    });
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar(const Graph &g)
{
    std::array<VertexMask, Graph::kMaxVertices> rows{};
    for (int v = 0; v < g.n(); ++v) {
        rows[v] = g.neighbors(v);
    }
    return is_planar_rows(rows.data(), g.n());
}

} // namespace k33lab
