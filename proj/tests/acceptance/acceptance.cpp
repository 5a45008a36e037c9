#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <k33lab/decomposition.hpp>
#include <k33lab/oracle.hpp>
#include <k33lab/pipeline.hpp>
#include <k33lab/planar_basis.hpp>
#include <k33lab/reference_data.hpp>

#include "support/compose.hpp"

using namespace k33lab;

namespace
{

struct Suite {
    bool extended = false;
    int p = 7;
    int workers = 1;
};

// Collects the first few failures of one criterion.
class Failures
{
public:
    void add(const std::string &what)
    {
        if (count_ < 5) {
            notes_ << "\n    " << what;
        }
        ++count_;
    }
    template <typename A, typename B>
    void expect_eq(const std::string &where, const A &got, const B &expected)
    {
        if (!(got == expected)) {
            std::ostringstream os;
            os << where << ": expected " << expected << ", got " << got;
            add(os.str());
        }
    }
    bool ok() const
    {
        return count_ == 0;
    }
    std::string notes() const
    {
        return count_ == 0 ? "" : notes_.str() + (count_ > 5 ? "\n    ..." : "");
    }

private:
    int count_ = 0;
    std::ostringstream notes_;
};

void compare(Failures &f, const std::string &what, const BivarSeries &got, const BivarSeries &expected, int nlo,
             int nhi, const std::function<bool(int, int)> &skip = [](int, int) { return false; })
{
    for (int n = nlo; n <= nhi; ++n) {
        const int top = std::max(got.edge_degree(n), expected.edge_degree(n));
        for (int m = 0; m <= top; ++m) {
            if (!skip(n, m)) {
                f.expect_eq(what + "(" + std::to_string(n) + "," + std::to_string(m) + ")", got.coeff(n, m),
                            expected.coeff(n, m));
            }
        }
    }
}

void compare_totals(Failures &f, const std::string &what, const BivarSeries &got, const CoefficientTable &ref,
                    int nlo, int nhi)
{
    if (ref.nmax < nhi) {
        f.add(what + ": reference stops at n=" + std::to_string(ref.nmax));
        return;
    }
    for (int n = nlo; n <= nhi; ++n) {
        f.expect_eq(what + "[" + std::to_string(n) + "]", got.total(n), Rational(ref.count(n, 0)));
    }
}

// Networks up to relabelling of their internal vertices.
std::vector<std::vector<Network>> network_classes(int max_internal)
{
    const auto labelled = brute::network_catalogue(max_internal);
    std::vector<std::vector<Network>> out(labelled.size());
    for (std::size_t k = 0; k < labelled.size(); ++k) {
        std::set<std::vector<Edge>> seen;
        for (const Network &net : labelled[k]) {
            std::vector<int> perm(net.graph.n());
            for (int v = 0; v < net.graph.n(); ++v) {
                perm[v] = v;
            }
            std::vector<Edge> canon;
            bool first = true;
            do {
                auto e = net.graph.relabelled(perm).edges();
                if (first || e < canon) {
                    canon = std::move(e);
                    first = false;
                }
            } while (std::next_permutation(perm.begin() + 2, perm.end()));
            if (seen.insert(canon).second) {
                out[k].push_back(net);
            }
        }
    }
    return out;
}

// Every assignment of network classes to the ten corner pairs of K5 with at
// most `budget` internal vertices in total, corners 0..4, internals 5...
void for_each_composition(const std::vector<std::vector<Network>> &classes, int budget,
                          const std::function<void(const Graph &)> &visit)
{
    std::array<const Network *, 10> chosen{};
    std::function<void(int, int)> rec = [&](int pair, int left) {
        if (pair == 10) {
            std::map<Edge, Network> nets;
            int next = 5;
            for (int p = 0; p < 10; ++p) {
                Network net = *chosen[p];
                for (int &l : net.internal_labels) {
                    l = next++;
                }
                const auto [i, j] = corner_pair(p);
                nets.emplace(Edge{i, j}, std::move(net));
            }
            visit(compose_graph({0, 1, 2, 3, 4}, nets));
            return;
        }
        for (int k = 0; k <= left && k < static_cast<int>(classes.size()); ++k) {
            for (const Network &net : classes[k]) {
                chosen[pair] = &net;
                rec(pair + 1, left - k);
            }
        }
    };
    rec(0, budget);
}

} // namespace

int main(int argc, char **argv)
{
    Suite suite;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) {
            suite.extended = true;
            suite.p = 8;
        } else {
            std::cerr << "usage: k33lab_acceptance [--extended]\n";
            return 2;
        }
    }
    suite.workers = default_workers();

    const auto clock_start = std::chrono::steady_clock::now();
    const CoefficientTable basis = embedded_planar_basis();
    std::cout << "suite: " << (suite.extended ? "extended" : "fast") << ", planar basis to n=" << suite.p
              << " (shipped table nmax=" << basis.nmax << ")\n";
    if (basis.nmax < suite.p) {
        std::cout << "FAIL  shipped planar basis stops at n=" << basis.nmax << '\n';
        return 1;
    }
    const PipelineResult r = run_pipeline(basis, suite.p);
    const int top = suite.p + 3;
    const double pipeline_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
    std::cout << "pipeline: " << pipeline_s << " s\n";

    int failed = 0;
    auto report = [&](int id, const std::string &title, const std::function<void(Failures &)> &body) {
        const auto t0 = std::chrono::steady_clock::now();
        Failures f;
        try {
            body(f);
        } catch (const std::exception &e) {
            f.add(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += f.ok() ? 0 : 1;
        std::cout << (f.ok() ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << s << " s]"
                  << f.notes() << '\n'
                  << std::flush;
    };
    const std::string up_to = " for n <= " + std::to_string(top);

    report(1, "f(n,m) matches reference for 5 <= n <= " + std::to_string(top), [&](Failures &f) {
        compare(f, "f", r.F, series_from_table(reference_table("F")), 0, top);
    });
    report(2, "f_n totals match reference" + up_to, [&](Failures &f) {
        compare_totals(f, "f_n", r.F, reference_table("F_n"), 0, top);
    });
    report(3, "H_P(n,m) matches reference for 4 <= n <= " + std::to_string(suite.p) + " (K2 row excluded)",
           [&](Failures &f) {
               const BivarSeries ref = series_from_table(reference_table("HP"));
               f.expect_eq("reference K2 row", ref.coeff(2, 1), 1);
               f.expect_eq("computed K2 row", r.HP.coeff(2, 1), 0);
               compare(f, "h_P", r.HP, ref, 0, suite.p, [](int n, int m) { return n == 2 && m == 1; });
               compare_totals(f, "h_P,n", r.HP, reference_table("HP_n"), 4, suite.p);
           });
    report(4, "h(n,m) matches reference for 5 <= n <= " + std::to_string(top) + ", h_6 = 0", [&](Failures &f) {
        compare(f, "h", r.HF_inversion, series_from_table(reference_table("HF")), 0, top);
        compare_totals(f, "h_n", r.HF_inversion, reference_table("HF_n"), 0, top);
        f.expect_eq("h_6", r.HF_inversion.total(6), 0);
    });
    const int cf_top = suite.extended ? 8 : 7;
    report(5, "connected counts |C_F[n]| for 5 <= n <= " + std::to_string(cf_top), [&](Failures &f) {
        const std::array<long, 4> expected{1, 150, 16800, 1809360};
        for (int n = 5; n <= cf_top; ++n) {
            f.expect_eq("C_F[" + std::to_string(n) + "]", r.CF.total(n), Rational(expected[n - 5]));
        }
        compare_totals(f, "C_F reference", r.CF, reference_table("CF_n"), 5, cf_top);
    });
    report(6, "H_F by inversion equals H_F by legs" + up_to, [&](Failures &f) {
        f.expect_eq("order of inversion route", r.HF_inversion.nmax(), top);
        f.expect_eq("order of legs route", r.HF_legs.nmax(), top);
        compare(f, "legs - inversion", r.HF_legs, r.HF_inversion, 0, top);
    });
    report(7, "exhaustive classification on 5, 6, 7 vertices gives f_n = 1, 120, 10920", [&](Failures &f) {
        const std::array<long, 3> expected{1, 120, 10920};
        OracleOptions options;
        options.workers = suite.workers;
        for (int n = 5; n <= 7; ++n) {
            const EdgeCounts counts = oracle_count(OracleClass::F, n, options);
            Rational total = 0;
            for (const auto &[m, c] : counts) {
                total += Rational(static_cast<unsigned long>(c));
                f.expect_eq("oracle vs series f(" + std::to_string(n) + "," + std::to_string(m) + ")",
                            Rational(static_cast<unsigned long>(c)), r.F.coeff(n, m));
            }
            f.expect_eq("oracle f_" + std::to_string(n), total, Rational(expected[n - 5]));
            f.expect_eq("series f_" + std::to_string(n), r.F.total(n), Rational(expected[n - 5]));
        }
    });
    report(8, "200 compose/decompose roundtrips (n <= 14); corner sets unique for every accepted graph with n <= 9",
           [&](Failures &f) {
               const auto catalogue = brute::network_catalogue(3);
               std::mt19937_64 rng(0x6b33);
               for (int trial = 0; trial < 200; ++trial) {
                   const brute::Composed c = brute::random_composition(rng, catalogue, 14);
                   const DecomposeResult d = decompose(c.graph);
                   const std::string tag = "roundtrip " + std::to_string(trial);
                   if (!d.accepted()) {
                       f.add(tag + ": rejected as " + std::string(to_string(d.reason)));
                       continue;
                   }
                   if (d.decomposition->corners != c.corners) {
                       f.add(tag + ": corners differ");
                   }
                   if (!brute::same_components(c.components, d.decomposition->components)) {
                       f.add(tag + ": components differ");
                   }
               }
               // Every accepted graph on n <= 9 vertices is a relabelled composition.
               const auto classes = network_classes(4);
               long graphs = 0;
               for_each_composition(classes, 4, [&](const Graph &g) {
                   ++graphs;
                   const DecomposeResult d = decompose(g);
                   if (!d.accepted()) {
                       f.add("composition on " + std::to_string(g.n()) + " vertices rejected as "
                             + std::string(to_string(d.reason)));
                       return;
                   }
                   const auto sets = valid_corner_sets(g);
                   if (sets.size() != 1 || sets.front() != d.decomposition->corners) {
                       f.add("composition on " + std::to_string(g.n()) + " vertices has "
                             + std::to_string(sets.size()) + " valid corner sets");
                   }
               });
               std::cout << "    (" << graphs << " compositions with n <= 9 checked)\n";
               // Labelled members from the exhaustive sweep as well.
               for (int n = 5; n <= 7; ++n) {
                   for (const Graph &g : collect_members(OracleClass::F, n)) {
                       const auto sets = valid_corner_sets(g);
                       if (sets.size() != 1) {
                           f.add("oracle member on " + std::to_string(n) + " vertices has "
                                 + std::to_string(sets.size()) + " valid corner sets");
                       }
                   }
               }
           });
    report(9, "substitution identities, maximal-graph identities, edge bound, integrality", [&](Failures &f) {
        compare(f, "H_P(x,R) + Gsp - P", compose_y(r.HP, r.R) + r.Gsp, r.P, 0, suite.p);
        compare(f, "H_F(x,R) - F", compose_y(r.HF_inversion, r.R), r.F, 0, top);
        for (int n = 7; n <= top; ++n) {
            f.expect_eq("h(n,3n-6) n=" + std::to_string(n), r.HF_inversion.coeff(n, 3 * n - 6),
                        r.F.coeff(n, 3 * n - 6));
        }
        for (int n = 4; n <= suite.p; ++n) {
            f.expect_eq("H_P(n,3n-6) n=" + std::to_string(n), r.HP.coeff(n, 3 * n - 6), r.P.coeff(n, 3 * n - 6));
        }
        // Edge bound on the series: f(n,m) = 0 past the bound.
        r.F.for_each_term([&](int n, int m, const Rational &) {
            if (!(n == 5 ? m == 10 : m <= 3 * n - 6)) {
                f.add("f(" + std::to_string(n) + "," + std::to_string(m) + ") nonzero past the edge bound");
            }
        });
        // And on every accepted and generated member.
        for (int n = 5; n <= 7; ++n) {
            for (const Graph &g : collect_members(OracleClass::F, n)) {
                if (!edge_bound_check(g)) {
                    f.add("oracle member violates the edge bound");
                }
            }
        }
        const auto catalogue = brute::network_catalogue(3);
        std::mt19937_64 rng(0x7f);
        for (int trial = 0; trial < 200; ++trial) {
            if (!edge_bound_check(brute::random_composition(rng, catalogue, 14).graph)) {
                f.add("composition violates the edge bound");
            }
        }
        const std::vector<std::pair<const char *, const BivarSeries *>> all{
            {"P", &r.P},   {"N_P", &r.NP},        {"R", &r.R},          {"S", &r.S},        {"Ppar", &r.Ppar},
            {"Gsp", &r.Gsp}, {"F", &r.F},         {"H_P", &r.HP},       {"H_F", &r.HF_inversion},
            {"H_F legs", &r.HF_legs}, {"Cdot", &r.Cdot}, {"C_F", &r.CF}};
        for (const auto &[name, s] : all) {
            if (!s->has_integer_coefficients() || !s->has_nonnegative_coefficients()) {
                f.add(std::string(name) + " has a fractional or negative coefficient");
            }
        }
    });

    const double total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - clock_start).count();
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " in "
              << total_s << " s\n";
    return failed == 0 ? 0 : 1;
}
