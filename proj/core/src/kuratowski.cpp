#include <k33lab/kuratowski.hpp>

#include <algorithm>
#include <functional>
#include <string>

#include <k33lab/errors.hpp>
#include <k33lab/planarity.hpp>

namespace k33lab
{

namespace
{

constexpr std::array<std::pair<int, int>, 10> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

VertexMask mask_of(const std::vector<int> &path)
{
    VertexMask m = 0;
    for (int v : path) {
        m |= bit(v);
    }
    return m;
}

// Reads off the sides of a subgraph that is a TK5, given as adjacency rows.
std::optional<K5Subdivision> trace_sides(const std::vector<VertexMask> &rows)
{
    std::vector<int> corners;
    for (int v = 0; v < static_cast<int>(rows.size()); ++v) {
        const int d = popcount(rows[v]);
        if (d == 4) {
            corners.push_back(v);
        } else if (d != 0 && d != 2) {
            return std::nullopt;
        }
    }
    if (corners.size() != 5) {
        return std::nullopt;
    }
    K5Subdivision t;
    std::copy(corners.begin(), corners.end(), t.corners.begin());
    VertexMask corner_mask = 0;
    for (int c : corners) {
        corner_mask |= bit(c);
    }
    std::array<bool, 10> seen{};
    for (int i = 0; i < 5; ++i) {
        bool ok = true;
        for_each_vertex(rows[corners[i]], [&](int w) {
            std::vector<int> path{corners[i]};
            int prev = corners[i];
            int cur = w;
            while ((corner_mask & bit(cur)) == 0) {
                path.push_back(cur);
                const VertexMask next = rows[cur] & ~bit(prev);
                prev = cur;
                cur = std::countr_zero(next);
            }
            path.push_back(cur);
            const int j = static_cast<int>(std::find(corners.begin(), corners.end(), cur) - corners.begin());
            if (j == i) {
                ok = false;
                return;
            }
            if (j < i) {
                return;
            }
            const int idx = corner_pair_index(i, j);
            if (seen[idx]) {
                ok = false;
                return;
            }
            seen[idx] = true;
            t.sides[idx] = std::move(path);
        });
        if (!ok) {
            return std::nullopt;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
        return std::nullopt;
    }
    return t;
}

// Backtracking over the ten sides: the direct edge first, then simple paths
// through unused non-corner vertices.
class SideRouter
{
public:
    SideRouter(const Graph &g, const std::array<int, 5> &corners) : g_(g), corners_(corners)
    {
        for (int c : corners) {
            corner_mask_ |= bit(c);
        }
    }

    std::optional<K5Subdivision> run()
    {
        if (route(0, corner_mask_)) {
            K5Subdivision t;
            t.corners = corners_;
            t.sides = sides_;
            return t;
        }
        return std::nullopt;
    }

private:
    bool route(int idx, VertexMask used)
    {
        if (idx == 10) {
            return true;
        }
        const int a = corners_[kPairs[idx].first];
        const int b = corners_[kPairs[idx].second];
        if (g_.has_edge(a, b)) {
            sides_[idx] = {a, b};
            if (route(idx + 1, used)) {
                return true;
            }
        }
        std::vector<int> path{a};
        return extend(idx, a, b, used, path);
    }

    bool extend(int idx, int cur, int target, VertexMask used, std::vector<int> &path)
    {
        bool done = false;
        for_each_vertex(g_.neighbors(cur) & ~used, [&](int w) {
            if (done) {
                return;
            }
            path.push_back(w);
            if (g_.has_edge(w, target)) {
                path.push_back(target);
                sides_[idx] = path;
                done = route(idx + 1, used | bit(w));
                path.pop_back();
            }
            if (!done) {
                done = extend(idx, w, target, used | bit(w), path);
            }
            path.pop_back();
        });
        return done;
    }

    const Graph &g_;
    std::array<int, 5> corners_;
    VertexMask corner_mask_ = 0;
    std::array<std::vector<int>, 10> sides_;
};

std::vector<VertexMask> rows_from_edges(int n, const std::vector<Edge> &edges)
{
    std::vector<VertexMask> rows(n, 0);
    for (const auto &[u, v] : edges) {
        rows[u] |= bit(v);
        rows[v] |= bit(u);
    }
    return rows;
}

} // namespace

int corner_pair_index(int i, int j)
{
    if (i > j) {
        std::swap(i, j);
    }
    for (int k = 0; k < 10; ++k) {
        if (kPairs[k] == std::pair{i, j}) {
            return k;
        }
    }
    throw InputError("corner positions must be distinct and below 5");
}

std::pair<int, int> corner_pair(int index)
{
    if (index < 0 || index >= 10) {
        throw InputError("corner pair index out of range");
    }
    return kPairs[index];
}

VertexMask K5Subdivision::vertices() const
{
    VertexMask m = 0;
    for (const auto &side : sides) {
        m |= mask_of(side);
    }
    return m;
}

VertexMask K5Subdivision::inner_vertices() const
{
    VertexMask m = vertices();
    for (int c : corners) {
        m &= ~bit(c);
    }
    return m;
}

std::vector<Edge> K5Subdivision::edges() const
{
    std::vector<Edge> out;
    for (const auto &side : sides) {
        for (std::size_t i = 0; i + 1 < side.size(); ++i) {
            out.emplace_back(std::min(side[i], side[i + 1]), std::max(side[i], side[i + 1]));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool K5Subdivision::is_valid_in(const Graph &g) const
{
    VertexMask corner_mask = 0;
    for (int c : corners) {
        if (c < 0 || c >= g.n() || (corner_mask & bit(c)) != 0) {
            return false;
        }
        corner_mask |= bit(c);
    }
    VertexMask inner_used = 0;
    for (int k = 0; k < 10; ++k) {
        const auto &side = sides[k];
        const auto [i, j] = kPairs[k];
        if (side.size() < 2 || side.front() != corners[i] || side.back() != corners[j]) {
            return false;
        }
        for (std::size_t p = 0; p + 1 < side.size(); ++p) {
            if (side[p + 1] < 0 || side[p + 1] >= g.n() || !g.has_edge(side[p], side[p + 1])) {
                return false;
            }
        }
        for (std::size_t p = 1; p + 1 < side.size(); ++p) {
            const VertexMask b = bit(side[p]);
            if ((corner_mask & b) != 0 || (inner_used & b) != 0) {
                return false;
            }
            inner_used |= b;
        }
    }
    return true;
}

std::vector<Edge> kuratowski_subgraph(const Graph &g)
{
    if (is_planar(g)) {
        throw InputError("a planar graph has no Kuratowski subgraph");
    }
    Graph h = g;
    for (const auto &[u, v] : g.edges()) {
        h.remove_edge(u, v);
        if (is_planar(h)) {
            h.add_edge(u, v);
        }
    }
    return h.edges();
}

std::optional<K5Subdivision> find_K5_subdivision_with_corners(const Graph &g, const std::array<int, 5> &corners)
{
    auto sorted = corners;
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted) {
        if (c < 0 || c >= g.n() || g.degree(c) < 4) {
            return std::nullopt;
        }
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return std::nullopt;
    }
    return SideRouter(g, sorted).run();
}

std::optional<K5Subdivision> find_K5_subdivision(const Graph &g)
{
    if (is_planar(g)) {
        return std::nullopt;
    }
    if (auto t = trace_sides(rows_from_edges(g.n(), kuratowski_subgraph(g)))) {
        return t;
    }
    if (g.n() > kCornerSearchLimit) {
        throw SizeLimitError("TK5 corner search is limited to " + std::to_string(kCornerSearchLimit)
                             + " vertices, got " + std::to_string(g.n()));
    }

    std::vector<int> candidates;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) >= 4) {
            candidates.push_back(v);
        }
    }
    const int k = static_cast<int>(candidates.size());
    if (k < 5) {
        return std::nullopt;
    }
    std::vector<std::pair<int, std::array<int, 5>>> subsets;
    std::array<int, 5> pick{};
    std::function<void(int, int)> gen = [&](int start, int depth) {
        if (depth == 5) {
            int low = Graph::kMaxVertices;
            for (int c : pick) {
                low = std::min(low, g.degree(c));
            }
            subsets.emplace_back(low, pick);
            return;
        }
        for (int i = start; i < k; ++i) {
            pick[depth] = candidates[i];
            gen(i + 1, depth + 1);
        }
    };
    gen(0, 0);
    std::stable_sort(subsets.begin(), subsets.end(),
                     [](const auto &a, const auto &b) { return a.first > b.first; });
    for (const auto &[low, corners] : subsets) {
        if (auto t = SideRouter(g, corners).run()) {
            return t;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_shortcut(const Graph &g, const K5Subdivision &t)
{
    const VertexMask in_t = t.vertices();
    const VertexMask outside = g.all_vertices() & ~in_t;
    for (const auto &side : t.sides) {
        const VertexMask targets = in_t & ~mask_of(side);
        for (std::size_t p = 1; p + 1 < side.size(); ++p) {
            const int w = side[p];
            // A chord to another side is never a T edge: T edges at w stay on its side.
            if (const VertexMask direct = g.neighbors(w) & targets; direct != 0) {
                return std::vector<int>{w, std::countr_zero(direct)};
            }
            std::array<int, Graph::kMaxVertices> parent{};
            VertexMask seen = g.neighbors(w) & outside;
            VertexMask frontier = seen;
            for_each_vertex(seen, [&](int v) { parent[v] = w; });
            while (frontier != 0) {
                int hit = -1;
                for_each_vertex(frontier, [&](int v) {
                    if (hit < 0 && (g.neighbors(v) & targets) != 0) {
                        hit = v;
                    }
                });
                if (hit >= 0) {
                    std::vector<int> path{std::countr_zero(g.neighbors(hit) & targets)};
                    for (int v = hit; v != w; v = parent[v]) {
                        path.push_back(v);
                    }
                    path.push_back(w);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                VertexMask next = 0;
                for_each_vertex(frontier, [&](int v) {
                    for_each_vertex(g.neighbors(v) & outside & ~seen & ~next, [&](int u) { parent[u] = v; });
                    next |= g.neighbors(v) & outside & ~seen;
                });
                seen |= next;
                frontier = next;
            }
        }
    }
    return std::nullopt;
}

std::optional<int> find_three_corner_vertex(const Graph &g, const K5Subdivision &t)
{
    const int n = g.n();
    const VertexMask outside = g.all_vertices() & ~t.vertices();
    VertexMask corner_mask = 0;
    for (int c : t.corners) {
        corner_mask |= bit(c);
    }
    // Vertex v splits into 2v (in) and 2v + 1 (out); corners drain into the sink.
    const int nodes = 2 * n + 1;
    const int sink = 2 * n;
    std::optional<int> found;
    for_each_vertex(outside, [&](int u) {
        if (found) {
            return;
        }
        std::vector<int> cap(static_cast<std::size_t>(nodes) * nodes, 0);
        auto at = [&](int a, int b) -> int & { return cap[static_cast<std::size_t>(a) * nodes + b]; };
        for_each_vertex(outside, [&](int v) {
            at(2 * v, 2 * v + 1) = v == u ? 5 : 1;
            for_each_vertex(g.neighbors(v) & outside, [&](int w) { at(2 * v + 1, 2 * w) = 1; });
            for_each_vertex(g.neighbors(v) & corner_mask, [&](int c) { at(2 * v + 1, 2 * c) = 1; });
        });
        for_each_vertex(corner_mask, [&](int c) { at(2 * c, sink) = 1; });

        int flow = 0;
        while (flow < 3) {
            std::vector<int> parent(nodes, -1);
            parent[2 * u] = 2 * u;
            std::vector<int> queue{2 * u};
            for (std::size_t q = 0; q < queue.size() && parent[sink] < 0; ++q) {
                const int a = queue[q];
                for (int b = 0; b < nodes; ++b) {
                    if (parent[b] < 0 && at(a, b) > 0) {
                        parent[b] = a;
                        queue.push_back(b);
                    }
                }
            }
            if (parent[sink] < 0) {
                break;
            }
            for (int b = sink; b != 2 * u; b = parent[b]) {
                --at(parent[b], b);
                ++at(b, parent[b]);
            }
            ++flow;
        }
        if (flow >= 3) {
            found = u;
        }
    });
    return found;
}

} // namespace k33lab
