#pragma once

#include <array>

#include <k33lab/graph.hpp>

namespace k33lab::detail
{

using Rows = std::array<VertexMask, Graph::kMaxVertices>;

// Deletes vertices of degree <= 1 and suppresses degree-2 vertices (the two
// neighbours become adjacent) until neither move applies. Both moves keep
// planarity, and both keep the existence of a minor of any graph with
// minimum degree 3. Returns the surviving vertex set.
inline VertexMask suppress_low_degree(Rows &rows, VertexMask alive)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for_each_vertex(alive, [&](int v) {
            if ((alive & bit(v)) == 0) {
                return;
            }
            const VertexMask nb = rows[v] & alive;
            const int d = popcount(nb);
            if (d > 2) {
                return;
            }
            alive &= ~bit(v);
            for_each_vertex(nb, [&](int u) { rows[u] &= ~bit(v); });
            if (d == 2) {
                const int a = std::countr_zero(nb);
                const int b = std::countr_zero(nb & (nb - 1));
                rows[a] |= bit(b);
                rows[b] |= bit(a);
            }
            rows[v] = 0;
            changed = true;
        });
    }
    return alive;
}

inline int edge_count(const Rows &rows, VertexMask alive)
{
    int twice = 0;
    for_each_vertex(alive, [&](int v) { twice += popcount(rows[v] & alive); });
    return twice / 2;
}

inline VertexMask reach(const Rows &rows, int source, VertexMask within)
{
    VertexMask seen = bit(source) & within;
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

} // namespace k33lab::detail
