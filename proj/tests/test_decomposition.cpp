#include <doctest.h>

#include <random>

#include <k33lab/decomposition.hpp>
#include <k33lab/errors.hpp>
#include <k33lab/minors.hpp>
#include <k33lab/oracle.hpp>

#include "support/compose.hpp"

using namespace k33lab;

namespace
{

const std::vector<std::vector<Network>> &catalogue()
{
    static const auto c = brute::network_catalogue(3);
    return c;
}

// K5 on 0..4 with side {0, 1} replaced by the network `side` (internal vertices from 5).
Graph K5_with_side(const Graph &side)
{
    Graph g(3 + side.n());
    for (const auto &[u, v] : Graph::complete(5).edges()) {
        if (!(u == 0 && v == 1)) {
            g.add_edge(u, v);
        }
    }
    for (const auto &[u, v] : side.edges()) {
        auto label = [](int x) { return x < 2 ? x : x + 3; };
        g.add_edge(label(u), label(v));
    }
    return g;
}

} // namespace

TEST_CASE("network catalogue sizes")
{
    CHECK(catalogue()[0].size() == 1);
    // 0-a-1 alone or with the pole edge.
    CHECK(catalogue()[1].size() == 2);
    for (const auto &level : catalogue()) {
        for (const Network &net : level) {
            CHECK(net.is_valid());
            CHECK(net.is_strongly_planar());
        }
    }
}

TEST_CASE("K5 is accepted with itself as the decomposition")
{
    const DecomposeResult r = decompose(Graph::complete(5));
    REQUIRE(r.accepted());
    CHECK(to_string(r.reason) == "accepted");
    CHECK(r.decomposition->corners == std::array<int, 5>{0, 1, 2, 3, 4});
    for (const auto &[pair, net] : r.decomposition->components) {
        CHECK(net.graph == Network::bare_edge().graph);
    }
}

TEST_CASE("K5 with a path side")
{
    Graph path(3);
    path.add_edge(0, 2);
    path.add_edge(2, 1);
    const Graph g = K5_with_side(path);
    const DecomposeResult r = decompose(g);
    REQUIRE(r.accepted());
    const Network &side = r.decomposition->components.at({0, 1});
    CHECK(side.internal_labels == std::vector<int>{5});
    CHECK_FALSE(side.has_pole_edge());
    CHECK(side.internal_count() == 1);
}

TEST_CASE("rejection reasons")
{
    CHECK(decompose(Graph::cycle(5)).reason == Rejection::planar);
    CHECK(decompose(Graph::complete(6)).reason == Rejection::k33);
    CHECK(decompose(Graph::complete_bipartite(3, 3)).reason == Rejection::k33);

    Graph pendant(6);
    for (const auto &[u, v] : Graph::complete(5).edges()) {
        pendant.add_edge(u, v);
    }
    pendant.add_edge(4, 5);
    CHECK(decompose(pendant).reason == Rejection::not_two_connected);

    // A K5-minus-edge network on the side {0, 1}: the 2-sum of two K5s.
    Graph k5e = Graph::complete(5);
    k5e.remove_edge(0, 1);
    const Graph twin = K5_with_side(k5e);
    CHECK_FALSE(has_K33_minor(twin));
    const DecomposeResult r = decompose(twin);
    CHECK(r.reason == Rejection::not_projective_planar);
    CHECK_FALSE(r.decomposition);
    CHECK(to_string(Rejection::not_projective_planar) == "not-projective-planar");
    CHECK(to_string(Rejection::not_two_connected) == "not-2-connected");
    CHECK(to_string(Rejection::k33) == "K33");
    CHECK(to_string(Rejection::planar) == "planar");
}

TEST_CASE("side decomposition needs the right corners")
{
    Graph path(3);
    path.add_edge(0, 2);
    path.add_edge(2, 1);
    const Graph g = K5_with_side(path);
    CHECK(side_decomposition(g, {0, 1, 2, 3, 4}));
    CHECK_FALSE(side_decomposition(g, {0, 1, 2, 3, 5}));
    CHECK(valid_corner_sets(g) == std::vector<std::array<int, 5>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("compose_graph input checks")
{
    std::map<Edge, Network> nets;
    for (int p = 0; p < 10; ++p) {
        const auto [i, j] = corner_pair(p);
        nets.emplace(Edge{i, j}, Network::bare_edge());
    }
    CHECK(compose_graph({0, 1, 2, 3, 4}, nets) == Graph::complete(5));
    CHECK_THROWS_AS(compose_graph({0, 1, 2, 3, 3}, nets), InputError);
    nets.at({0, 1}) = Network::path(6);
    CHECK_THROWS_AS(compose_graph({0, 1, 2, 3, 4}, nets), InputError);
    nets.at({0, 1}) = Network::path(5);
    CHECK(compose_graph({0, 1, 2, 3, 4}, nets).n() == 6);
    nets.erase({0, 1});
    CHECK_THROWS_AS(compose_graph({0, 1, 2, 3, 4}, nets), InputError);
}

TEST_CASE("compose and decompose roundtrip")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const brute::Composed c = brute::random_composition(rng, catalogue(), 14);
        INFO("trial " << trial << " n=" << c.graph.n());
        const DecomposeResult r = decompose(c.graph);
        REQUIRE(r.accepted());
        CHECK(r.decomposition->corners == c.corners);
        CHECK(brute::same_components(c.components, r.decomposition->components));
        CHECK(edge_bound_check(c.graph));
        CHECK(compose_graph(r.decomposition->corners, r.decomposition->components) == c.graph);
    }
}

TEST_CASE("corner sets of composed graphs are unique")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const brute::Composed c = brute::random_composition(rng, catalogue(), 9);
        const auto sets = valid_corner_sets(c.graph);
        REQUIRE(sets.size() == 1);
        CHECK(sets.front() == c.corners);
    }
}

TEST_CASE("corner sets of small class members are unique")
{
    for (int n = 5; n <= 6; ++n) {
        for (const Graph &g : collect_members(OracleClass::F, n)) {
            const DecomposeResult r = decompose(g);
            REQUIRE(r.accepted());
            CHECK(edge_bound_check(g));
            const auto sets = valid_corner_sets(g);
            REQUIRE(sets.size() == 1);
            CHECK(sets.front() == r.decomposition->corners);
        }
    }
}

TEST_CASE("edge bound")
{
    CHECK(edge_bound_check(Graph::complete(5)));
    Graph k5e = Graph::complete(5);
    k5e.remove_edge(0, 1);
    CHECK_FALSE(edge_bound_check(k5e));
    CHECK_FALSE(edge_bound_check(Graph::complete(7)));
    CHECK(edge_bound_check(Graph::cycle(8)));
}

TEST_CASE("size guard on the corner enumeration")
{
    CHECK_THROWS_AS(valid_corner_sets(Graph::cycle(21)), SizeLimitError);
}
