#include <k33lab/minors.hpp>

#include <k33lab/planarity.hpp>

#include "reduction.hpp"

namespace k33lab
{

namespace
{

using detail::Rows;

bool k33_subgraph(const Rows &rows, VertexMask six)
{
    // The side holding the lowest vertex is that vertex plus two of the other five.
    const int first = std::countr_zero(six);
    const VertexMask rest = six & ~bit(first);
    bool found = false;
    for_each_vertex(rest, [&](int a) {
        for_each_vertex(rest & above(a), [&](int b) {
            const VertexMask side = bit(first) | bit(a) | bit(b);
            const VertexMask other = six & ~side;
            bool ok = true;
            for_each_vertex(side, [&](int v) { ok = ok && (rows[v] & other) == other; });
            found = found || ok;
        });
    });
    return found;
}

Rows restricted(const Rows &rows, VertexMask keep)
{
    Rows out{};
    for_each_vertex(keep, [&](int v) { out[v] = rows[v] & keep; });
    return out;
}

bool planar(const Rows &rows, VertexMask alive)
{
    std::array<int, Graph::kMaxVertices> index{};
    int k = 0;
    for_each_vertex(alive, [&](int v) { index[v] = k++; });
    Rows compact{};
    for_each_vertex(alive, [&](int v) {
        for_each_vertex(rows[v] & alive, [&](int u) { compact[index[v]] |= bit(index[u]); });
    });
    return is_planar_rows(compact.data(), k);
}

// Pieces of `alive` after removing `cut`, each with the cut vertices put back.
std::vector<VertexMask> pieces(const Rows &rows, VertexMask alive, VertexMask cut)
{
    std::vector<VertexMask> out;
    const VertexMask rest = alive & ~cut;
    VertexMask left = rest;
    while (left != 0) {
        const VertexMask comp = detail::reach(rows, std::countr_zero(left), rest);
        left &= ~comp;
        out.push_back(comp | cut);
    }
    return out;
}

// K3,3 is 3-connected, so a model survives the splitting at 1- and 2-cuts into
// one piece (with a virtual edge across a 2-cut; any other piece realises it as
// a path). A 3-connected non-planar graph other than K5 contains a K3,3
// subdivision (Hall), which settles the unsplittable case.
bool search(Rows rows, VertexMask alive)
{
    alive = detail::suppress_low_degree(rows, alive);
    rows = restricted(rows, alive);
    const int n = popcount(alive);
    if (n < 6 || detail::edge_count(rows, alive) < 9) {
        return false;
    }
    if (n == 6) {
        return k33_subgraph(rows, alive);
    }
    if (planar(rows, alive)) {
        return false;
    }

    bool split = false;
    bool found = false;
    for_each_vertex(alive, [&](int c) {
        if (split) {
            return;
        }
        auto parts = pieces(rows, alive, bit(c));
        if (parts.size() < 2) {
            return;
        }
        split = true;
        for (VertexMask piece : parts) {
            found = found || search(restricted(rows, piece), piece);
        }
    });
    if (split) {
        return found;
    }

    for_each_vertex(alive, [&](int u) {
        for_each_vertex(alive & above(u), [&](int v) {
            if (split) {
                return;
            }
            auto parts = pieces(rows, alive, bit(u) | bit(v));
            if (parts.size() < 2) {
                return;
            }
            split = true;
            for (VertexMask piece : parts) {
                if (found) {
                    break;
                }
                Rows sub = restricted(rows, piece);
                sub[u] |= bit(v);
                sub[v] |= bit(u);
                found = search(sub, piece);
            }
        });
    });
    if (split) {
        return found;
    }
    return true;
}

Rows rows_of(const Graph &g)
{
    Rows rows{};
    for (int v = 0; v < g.n(); ++v) {
        rows[v] = g.neighbors(v);
    }
    return rows;
}

} // namespace

bool contains_K33_on(const Graph &g, VertexMask six)
{
    return popcount(six) == 6 && k33_subgraph(rows_of(g), six);
}

bool has_K33_minor(const Graph &g)
{
    return search(rows_of(g), g.all_vertices());
}

} // namespace k33lab
