#include <k33lab/decomposition.hpp>

#include <algorithm>
#include <set>
#include <string>

#include <k33lab/errors.hpp>
#include <k33lab/minors.hpp>
#include <k33lab/planarity.hpp>

namespace k33lab
{

std::string_view to_string(Rejection r)
{
    switch (r) {
    case Rejection::none:
        return "accepted";
    case Rejection::not_two_connected:
        return "not-2-connected";
    case Rejection::planar:
        return "planar";
    case Rejection::k33:
        return "K33";
    case Rejection::not_projective_planar:
        return "not-projective-planar";
    }
    return "unknown";
}

std::optional<SideDecomposition> side_decomposition(const Graph &g, const std::array<int, 5> &corners)
{
    SideDecomposition d;
    d.corners = corners;
    std::sort(d.corners.begin(), d.corners.end());
    VertexMask corner_mask = 0;
    for (int c : d.corners) {
        if (c < 0 || c >= g.n() || (corner_mask & bit(c)) != 0) {
            return std::nullopt;
        }
        corner_mask |= bit(c);
    }

    std::map<Edge, VertexMask> attached;
    for (VertexMask comp : connected_components(g, g.all_vertices() & ~corner_mask)) {
        VertexMask touch = 0;
        for_each_vertex(comp, [&](int v) { touch |= g.neighbors(v) & corner_mask; });
        if (popcount(touch) != 2) {
            return std::nullopt;
        }
        const int a = std::countr_zero(touch);
        const int b = std::countr_zero(touch & (touch - 1));
        attached[{a, b}] |= comp;
    }

    for (int k = 0; k < 10; ++k) {
        const auto [i, j] = corner_pair(k);
        const int a = d.corners[i];
        const int b = d.corners[j];
        std::vector<int> order{a, b};
        const auto it = attached.find({a, b});
        if (it != attached.end()) {
            for_each_vertex(it->second, [&](int v) { order.push_back(v); });
        }
        Network net{g.induced(order), std::vector<int>(order.begin() + 2, order.end())};
        if (!net.is_valid() || !net.is_strongly_planar()) {
            return std::nullopt;
        }
        d.components.emplace(Edge{a, b}, std::move(net));
    }
    return d;
}

namespace
{

template <typename F>
void for_each_five_subset(int n, F &&f)
{
    std::array<int, 5> c{};
    for (c[0] = 0; c[0] < n; ++c[0]) {
        for (c[1] = c[0] + 1; c[1] < n; ++c[1]) {
            for (c[2] = c[1] + 1; c[2] < n; ++c[2]) {
                for (c[3] = c[2] + 1; c[3] < n; ++c[3]) {
                    for (c[4] = c[3] + 1; c[4] < n; ++c[4]) {
                        if (!f(c)) {
                            return;
                        }
                    }
                }
            }
        }
    }
}

bool corners_have_degree(const Graph &g, const std::array<int, 5> &c)
{
    return std::all_of(c.begin(), c.end(), [&](int v) { return g.degree(v) >= 4; });
}

} // namespace

DecomposeResult decompose(const Graph &g)
{
    DecomposeResult result;
    if (!is_two_connected(g)) {
        result.reason = Rejection::not_two_connected;
        return result;
    }
    if (is_planar(g)) {
        result.reason = Rejection::planar;
        return result;
    }
    if (has_K33_minor(g)) {
        result.reason = Rejection::k33;
        return result;
    }
    // Without K3,3 the minimal non-planar subgraph is a TK5.
    if (const auto t = find_K5_subdivision(g)) {
        result.decomposition = side_decomposition(g, t->corners);
    }
    if (!result.decomposition && g.n() <= kCornerRetryLimit) {
        for_each_five_subset(g.n(), [&](const std::array<int, 5> &c) {
            if (corners_have_degree(g, c)) {
                result.decomposition = side_decomposition(g, c);
            }
            return !result.decomposition;
        });
    }
    if (!result.decomposition) {
        result.reason = Rejection::not_projective_planar;
    }
    return result;
}

std::vector<std::array<int, 5>> valid_corner_sets(const Graph &g)
{
    if (g.n() > kCornerSearchLimit) {
        throw SizeLimitError("corner-set scan is limited to " + std::to_string(kCornerSearchLimit)
                             + " vertices, got " + std::to_string(g.n()));
    }
    std::vector<std::array<int, 5>> out;
    for_each_five_subset(g.n(), [&](const std::array<int, 5> &c) {
        if (corners_have_degree(g, c) && side_decomposition(g, c)) {
            out.push_back(c);
        }
        return true;
    });
    return out;
}

Graph compose_graph(const std::array<int, 5> &corners, const std::map<Edge, Network> &nets)
{
    std::set<int> labels(corners.begin(), corners.end());
    if (labels.size() != 5) {
        throw InputError("corners must be five distinct labels");
    }
    auto sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    if (nets.size() != 10) {
        throw InputError("compose_graph needs exactly ten networks");
    }
    std::size_t total = 5;
    for (int k = 0; k < 10; ++k) {
        const auto [i, j] = corner_pair(k);
        const auto it = nets.find({sorted[i], sorted[j]});
        if (it == nets.end()) {
            throw InputError("missing network for corners " + std::to_string(sorted[i]) + " "
                             + std::to_string(sorted[j]));
        }
        const Network &net = it->second;
        if (static_cast<int>(net.internal_labels.size()) != net.internal_count()) {
            throw InputError("network label list does not match its size");
        }
        for (int label : net.internal_labels) {
            if (!labels.insert(label).second) {
                throw InputError("label " + std::to_string(label) + " used twice");
            }
        }
        total += net.internal_labels.size();
    }
    const int n = static_cast<int>(total);
    if (*labels.begin() != 0 || *labels.rbegin() != n - 1) {
        throw InputError("labels must be exactly 0.." + std::to_string(n - 1));
    }
    std::vector<Edge> edges;
    for (const auto &[pair, net] : nets) {
        const auto part = net.global_edges(pair.first, pair.second);
        edges.insert(edges.end(), part.begin(), part.end());
    }
    return Graph::from_edges(n, edges);
}

bool edge_bound_check(const Graph &g)
{
    if (g.n() == 5) {
        return g.m() == 10;
    }
    return g.n() >= 6 && g.m() <= 3 * g.n() - 6;
}

} // namespace k33lab
