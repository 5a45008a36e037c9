#include <doctest.h>

#include <map>

#include <k33lab/errors.hpp>
#include <k33lab/homeomorphic.hpp>
#include <k33lab/planar_basis.hpp>
#include <k33lab/reference_data.hpp>
#include <k33lab/series_parallel.hpp>

#include "support/brute.hpp"

using namespace k33lab;

namespace
{

struct NetworkCounts {
    std::map<int, long> all;
    std::map<int, long> series;
};

// Series-parallel networks with k internal vertices: valid networks whose
// closure has no K4 minor.
NetworkCounts sp_networks(int k)
{
    NetworkCounts c;
    const auto k4 = brute::complete_pattern(4);
    brute::for_each_network_graph(k, [&](const Graph &g) {
        if (!brute::valid_network(g)) {
            return;
        }
        Graph closure = g;
        closure.add_edge(0, 1);
        if (brute::has_minor(closure, k4)) {
            return;
        }
        ++c.all[g.m()];
        if (brute::essentially_series(g)) {
            ++c.series[g.m()];
        }
    });
    return c;
}

Rational at(const std::map<int, long> &m, int key)
{
    const auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

// (R + 1) / (1 + y) by exact division of each slice.
BivarSeries divide_by_one_plus_y(const BivarSeries &f)
{
    BivarSeries q(f.nmax());
    for (int n = 0; n <= f.last_slice(); ++n) {
        EdgePoly p = f.slice(n);
        if (p.empty()) {
            continue;
        }
        EdgePoly out(p.size() - 1);
        for (int m = static_cast<int>(p.size()) - 1; m >= 1; --m) {
            out[m - 1] = p[m];
            p[m - 1] -= p[m];
        }
        REQUIRE(p[0] == 0);
        q.set_slice(n, out);
    }
    return q;
}

} // namespace

TEST_CASE("R low slices")
{
    const BivarSeries r = compute_R(6);
    CHECK(r.slice(0) == EdgePoly{0, 1});
    CHECK(r.slice(1) == EdgePoly{0, 0, 1, 1});
    CHECK(r.has_integer_coefficients());
    CHECK(r.has_nonnegative_coefficients());
}

TEST_CASE("R, S and Ppar against enumerated networks")
{
    const BivarSeries r = compute_R(4);
    const auto [ppar, s] = split_series_parallel(r);
    CHECK(ppar.slice(0) == EdgePoly{0, 1});
    CHECK(s.slice(0).empty());
    CHECK(s.slice(1) == EdgePoly{0, 0, 1});
    for (int k = 0; k <= 4; ++k) {
        const NetworkCounts c = sp_networks(k);
        for (int m = 0; m <= 3 * k + 3; ++m) {
            CHECK(r.coeff(k, m) == at(c.all, m));
            CHECK(s.coeff(k, m) == at(c.series, m));
            CHECK(ppar.coeff(k, m) == at(c.all, m) - at(c.series, m));
        }
    }
}

TEST_CASE("R = S + Ppar and the fixed point is stable")
{
    const BivarSeries r = compute_R(9);
    const auto [ppar, s] = split_series_parallel(r);
    CHECK(ppar + s == r);
    CHECK(R_step(r) == r);
    const SPSystem sys = compute_sp_system(7);
    CHECK(sys.R == sys.S + sys.Ppar);
    CHECK(sys.Gsp.nmax() == 7);
}

TEST_CASE("Gsp small values")
{
    const BivarSeries g = compute_Gsp(8);
    CHECK(g.coeff(2, 1) == 1);
    CHECK(g.coeff(3, 3) == 1);
    CHECK(g.coeff(4, 4) == 3);
    CHECK(g.coeff(4, 5) == 6);
    CHECK(g.coeff(4, 6) == 0);
    CHECK(g.has_integer_coefficients());
    CHECK(g.has_nonnegative_coefficients());
}

TEST_CASE("Gsp against exhaustive K4-minor-free count")
{
    const BivarSeries g = compute_Gsp(6);
    const auto k4 = brute::complete_pattern(4);
    for (int n = 2; n <= 6; ++n) {
        std::map<int, long> counts;
        const int e = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
            const Graph gr = brute::graph_from_mask(n, mask);
            if (gr.m() <= 2 * n - 3 && is_two_connected(gr) && !brute::has_minor(gr, k4)) {
                ++counts[gr.m()];
            }
        }
        for (int m = 0; m <= e; ++m) {
            CHECK(g.coeff(n, m) == at(counts, m));
        }
    }
}

TEST_CASE("Gsp integrand: exp form equals (R + 1) / (1 + y)")
{
    const BivarSeries r = compute_R(7);
    const BivarSeries xr = mul(BivarSeries::x(), r);
    const BivarSeries e = exp(divide(mul(xr, r), BivarSeries::one() + xr).truncated(7));
    CHECK(divide_by_one_plus_y(r + BivarSeries::one()) == e);
    const BivarSeries g = scale(mul_x_power(integrate_y(divide_by_one_plus_y(r + BivarSeries::one())), 2), Rational(1, 2));
    CHECK(g.truncated(9) == compute_Gsp(9));
}

TEST_CASE("networks of series-parallel graphs are R")
{
    const BivarSeries g = compute_Gsp(10);
    const BivarSeries n = network_series_from_class(g, true);
    CHECK(n == compute_R(8));
}

TEST_CASE("Gsp is dominated by P")
{
    const CoefficientTable basis = embedded_planar_basis();
    const BivarSeries p = planar_series(basis, basis.nmax);
    const BivarSeries g = compute_Gsp(basis.nmax);
    g.for_each_term([&](int n, int m, const Rational &c) { CHECK(c <= p.coeff(n, m)); });
}

TEST_CASE("hi_core verdicts")
{
    CHECK(hi_core(Graph::cycle(6)).series_parallel);
    CHECK(hi_core(Graph::complete(2)).series_parallel);
    Graph k4s(5);
    for (const auto &[u, v] : Graph::complete(4).edges()) {
        if (!(u == 0 && v == 1)) {
            k4s.add_edge(u, v);
        }
    }
    k4s.add_edge(0, 4);
    k4s.add_edge(4, 1);
    const CoreResult core = hi_core(k4s);
    REQUIRE_FALSE(core.series_parallel);
    CHECK(core.core == Graph::complete(4));
    CHECK(core.original_labels == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(hi_core(Graph(3)), InputError);
    CHECK(is_series_parallel(Graph::complete_bipartite(2, 4)));
    CHECK_FALSE(is_series_parallel(Graph::complete(4)));
}
