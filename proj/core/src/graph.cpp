#include <k33lab/graph.hpp>

#include <algorithm>
#include <string>

#include <k33lab/errors.hpp>
#include <k33lab/planarity.hpp>

namespace k33lab
{

Graph::Graph(int n)
{
    if (n < 0 || n > kMaxVertices) {
        throw InputError("graph size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    }
    adj_.assign(n, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto &[u, v] : edges) {
        if (!g.add_edge(u, v)) {
            throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        }
    }
    return g;
}

Graph Graph::complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Graph Graph::cycle(int n)
{
    if (n < 3) {
        throw InputError("a cycle needs at least 3 vertices");
    }
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        g.add_edge(v, (v + 1) % n);
    }
    return g;
}

Graph Graph::complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u) {
        for (int v = a; v < a + b; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

void Graph::check_vertex(int v) const
{
    if (v < 0 || v >= n()) {
        throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n() - 1));
    }
}

int Graph::min_degree() const
{
    int d = n() == 0 ? 0 : kMaxVertices;
    for (int v = 0; v < n(); ++v) {
        d = std::min(d, degree(v));
    }
    return d;
}

bool Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw InputError("loop at vertex " + std::to_string(u));
    }
    if (has_edge(u, v)) {
        return false;
    }
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v)) {
        return false;
    }
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
    --m_;
    return true;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u) {
        for_each_vertex(adj_[u] & above(u), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

Graph Graph::induced(std::span<const int> vertices) const
{
    Graph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

Graph Graph::relabelled(std::span<const int> perm) const
{
    if (static_cast<int>(perm.size()) != n()) {
        throw InputError("relabelling has the wrong length");
    }
    Graph g(n());
    for (const auto &[u, v] : edges()) {
        g.add_edge(perm[u], perm[v]);
    }
    if (g.m() != m()) {
        throw InputError("relabelling is not a permutation");
    }
    return g;
}

VertexMask reachable_from(const Graph &g, int source, VertexMask within)
{
    VertexMask seen = bit(source) & within;
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool is_connected(const Graph &g)
{
    if (g.n() == 0) {
        return true;
    }
    return reachable_from(g, 0, g.all_vertices()) == g.all_vertices();
}

std::vector<VertexMask> connected_components(const Graph &g, VertexMask within)
{
    std::vector<VertexMask> comps;
    VertexMask left = within;
    while (left != 0) {
        const VertexMask c = reachable_from(g, std::countr_zero(left), within);
        comps.push_back(c);
        left &= ~c;
    }
    return comps;
}

namespace
{

VertexMask reach_rows(const VertexMask *rows, VertexMask within) noexcept
{
    VertexMask seen = within & (~within + 1);
    VertexMask frontier = seen;
    while (frontier != 0) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](int v) { next |= rows[v]; });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

} // namespace

bool is_two_connected_rows(const VertexMask *rows, int n) noexcept
{
    if (n < 2) {
        return false;
    }
    if (n == 2) {
        return (rows[0] >> 1) & 1U;
    }
    const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
    for (int v = 0; v < n; ++v) {
        if (popcount(rows[v]) < 2) {
            return false;
        }
    }
    if (reach_rows(rows, all) != all) {
        return false;
    }
    for (int v = 0; v < n; ++v) {
        const VertexMask rest = all & ~bit(v);
        if (reach_rows(rows, rest) != rest) {
            return false;
        }
    }
    return true;
}

bool is_two_connected(const Graph &g)
{
    std::vector<VertexMask> rows(g.n());
    for (int v = 0; v < g.n(); ++v) {
        rows[v] = g.neighbors(v);
    }
    return is_two_connected_rows(rows.data(), g.n());
}

Network Network::bare_edge()
{
    Network net{Graph(2), {}};
    net.graph.add_edge(0, 1);
    return net;
}

Network Network::path(int label)
{
    Network net{Graph(3), {label}};
    net.graph.add_edge(0, 2);
    net.graph.add_edge(2, 1);
    return net;
}

Graph Network::closure() const
{
    Graph g = graph;
    g.add_edge(0, 1);
    return g;
}

bool Network::is_valid() const
{
    if (graph.n() < 2 || static_cast<int>(internal_labels.size()) != graph.n() - 2) {
        return false;
    }
    return is_connected(graph) && is_two_connected(closure());
}

bool Network::is_strongly_planar() const
{
    return is_planar(closure());
}

Network Network::swapped() const
{
    std::vector<int> perm(graph.n());
    for (int v = 0; v < graph.n(); ++v) {
        perm[v] = v;
    }
    if (graph.n() >= 2) {
        std::swap(perm[0], perm[1]);
    }
    return Network{graph.relabelled(perm), internal_labels};
}

std::vector<Edge> Network::global_edges(int pole0_label, int pole1_label) const
{
    auto label = [&](int v) { return v == 0 ? pole0_label : v == 1 ? pole1_label : internal_labels[v - 2]; };
    std::vector<Edge> out;
    for (const auto &[u, v] : graph.edges()) {
        const int a = label(u);
        const int b = label(v);
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace k33lab
