#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include <k33lab/graph.hpp>
#include <k33lab/kuratowski.hpp>

namespace k33lab
{

// Five corners with one network per corner pair. The key {a, b} has a < b;
// pole 0 of the network sits on a, pole 1 on b.
struct SideDecomposition {
    std::array<int, 5> corners{};
    std::map<Edge, Network> components;
};

enum class Rejection {
    none,
    not_two_connected,
    planar,
    k33,
    not_projective_planar,
};

std::string_view to_string(Rejection r);

struct DecomposeResult {
    Rejection reason = Rejection::none;
    std::optional<SideDecomposition> decomposition;

    bool accepted() const noexcept
    {
        return reason == Rejection::none;
    }
};

// Exhaustive corner retry before "not-projective-planar" applies up to this size.
inline constexpr int kCornerRetryLimit = 12;

// Membership test for F with the side decomposition of accepted graphs.
DecomposeResult decompose(const Graph &g);

// The side decomposition for corner set `corners`, if every component of
// G - corners meets exactly two corners and every pair network is a valid,
// strongly planar network.
std::optional<SideDecomposition> side_decomposition(const Graph &g, const std::array<int, 5> &corners);

// All corner sets admitting side_decomposition; used to check uniqueness.
// Throws SizeLimitError above kCornerSearchLimit vertices.
std::vector<std::array<int, 5>> valid_corner_sets(const Graph &g);

// K5 with each pair {a, b} replaced by nets.at({a, b}). Corners and internal
// labels must together be exactly 0..n-1.
Graph compose_graph(const std::array<int, 5> &corners, const std::map<Edge, Network> &nets);

// m == 10 when n == 5, m <= 3n - 6 when n >= 6.
bool edge_bound_check(const Graph &g);

} // namespace k33lab
