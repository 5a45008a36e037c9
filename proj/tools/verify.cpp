#include "verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <k33lab/oracle.hpp>
#include <k33lab/pipeline.hpp>
#include <k33lab/planar_basis.hpp>
#include <k33lab/reference_data.hpp>

namespace k33lab::cli
{

namespace
{

struct Mismatch {
    std::string what;
    int n;
    std::string m;
    std::string expected;
    std::string got;
};

std::string str(const Rational &q)
{
    return q.get_str();
}

class Checker
{
public:
    explicit Checker(std::ostream &out) : out_(out) {}

    void check(const std::string &name, const std::vector<Mismatch> &bad)
    {
        ++report_.checks;
        if (bad.empty()) {
            out_ << "ok       " << name << '\n';
            return;
        }
        ++report_.failures;
        out_ << "MISMATCH " << name << " (" << bad.size() << " entries)\n";
        const std::size_t shown = std::min<std::size_t>(bad.size(), 20);
        for (std::size_t i = 0; i < shown; ++i) {
            print("  ", bad[i]);
        }
        for (const auto &b : bad) {
            if (!first_ || b.n < first_->n) {
                first_ = b;
            }
        }
    }

    VerifyReport finish()
    {
        if (first_) {
            print("first mismatch: ", *first_);
        }
        out_ << (report_.failures == 0 ? "verify: all " : "verify: ") << report_.checks - report_.failures << "/"
             << report_.checks << " checks passed\n";
        return report_;
    }

private:
    void print(const char *prefix, const Mismatch &b)
    {
        out_ << prefix << "class=" << b.what << " n=" << b.n << " m=" << b.m << " expected=" << b.expected
             << " got=" << b.got << '\n';
    }

    std::ostream &out_;
    VerifyReport report_;
    std::optional<Mismatch> first_;
};

// Coefficientwise diff for nlo <= n <= nhi; keys the predicate rejects are skipped.
std::vector<Mismatch> diff_series(const std::string &what, const BivarSeries &got, const BivarSeries &expected,
                                  int nlo, int nhi,
                                  const std::function<bool(int, int)> &skip = [](int, int) { return false; })
{
    std::vector<Mismatch> bad;
    for (int n = nlo; n <= nhi; ++n) {
        const int top = std::max(got.edge_degree(n), expected.edge_degree(n));
        for (int m = 0; m <= top; ++m) {
            if (skip(n, m)) {
                continue;
            }
            if (got.coeff(n, m) != expected.coeff(n, m)) {
                bad.push_back({what, n, std::to_string(m), str(expected.coeff(n, m)), str(got.coeff(n, m))});
            }
        }
    }
    return bad;
}

std::vector<Mismatch> diff_totals(const std::string &what, const BivarSeries &got, const CoefficientTable &ref,
                                  int nlo, int nhi)
{
    std::vector<Mismatch> bad;
    for (int n = nlo; n <= std::min(nhi, ref.nmax); ++n) {
        const Rational g = got.total(n);
        const Rational e(ref.count(n, 0));
        if (g != e) {
            bad.push_back({what, n, "all", str(e), str(g)});
        }
    }
    return bad;
}

std::string range(int lo, int hi)
{
    return std::to_string(lo) + " <= n <= " + std::to_string(hi);
}

} // namespace

VerifyReport run_verification(const CoefficientTable &basis, const VerifyOptions &options, std::ostream &out)
{
    const int p = options.p > 0 ? options.p : basis.nmax;
    const PipelineResult r = run_pipeline(basis, p);
    const int top = p + 3;
    out << "basis: class=" << basis.class_name << " nmax=" << basis.nmax << " provenance="
        << to_string(basis.provenance) << ", using P to n=" << p << '\n';

    Checker c(out);
    const BivarSeries refF = series_from_table(reference_table("F"));
    const BivarSeries refHP = series_from_table(reference_table("HP"));
    const BivarSeries refHF = series_from_table(reference_table("HF"));

    c.check("F(n,m) reference, " + range(5, top), diff_series("F", r.F, refF, 0, std::min(top, refF.nmax())));
    c.check("F totals reference, " + range(5, top), diff_totals("F", r.F, reference_table("F_n"), 5, top));
    // The published HP table adds a K2 row at n = 2; HP itself excludes K2.
    c.check("HP(n,m) reference (K2 row skipped), " + range(4, p),
            diff_series("HP", r.HP, refHP, 0, std::min(p, refHP.nmax()), [](int n, int m) { return n == 2 && m == 1; }));
    c.check("HP totals reference, " + range(4, p), diff_totals("HP", r.HP, reference_table("HP_n"), 4, p));
    c.check("HF(n,m) reference, " + range(5, top), diff_series("HF", r.HF_inversion, refHF, 0, std::min(top, refHF.nmax())));
    c.check("HF totals reference, " + range(5, top), diff_totals("HF", r.HF_inversion, reference_table("HF_n"), 5, top));
    c.check("CF totals reference, " + range(5, top), diff_totals("CF", r.CF, reference_table("CF_n"), 5, top));

    c.check("HF by inversion equals HF by legs", diff_series("HF legs", r.HF_legs, r.HF_inversion, 0, top));
    c.check("HP(x, R) + Gsp = P", diff_series("P roundtrip", compose_y(r.HP, r.R) + r.Gsp, r.P, 0, p));
    c.check("HF(x, R) = F", diff_series("F roundtrip", compose_y(r.HF_inversion, r.R), r.F, 0, top));
    {
        std::vector<Mismatch> bad;
        for (int n = 7; n <= top; ++n) {
            if (r.HF_inversion.coeff(n, 3 * n - 6) != r.F.coeff(n, 3 * n - 6)) {
                bad.push_back({"HF max", n, std::to_string(3 * n - 6), str(r.F.coeff(n, 3 * n - 6)),
                               str(r.HF_inversion.coeff(n, 3 * n - 6))});
            }
        }
        c.check("h(n,3n-6) = f(n,3n-6), " + range(7, top), bad);
    }
    {
        std::vector<Mismatch> bad;
        for (int n = 4; n <= p; ++n) {
            if (r.HP.coeff(n, 3 * n - 6) != r.P.coeff(n, 3 * n - 6)) {
                bad.push_back({"HP max", n, std::to_string(3 * n - 6), str(r.P.coeff(n, 3 * n - 6)),
                               str(r.HP.coeff(n, 3 * n - 6))});
            }
        }
        c.check("HP(n,3n-6) = P(n,3n-6), " + range(4, p), bad);
    }
    c.check("N_P agrees with R for n <= 1", diff_series("N_P", r.NP, r.R, 0, 1));
    c.check("networks of Gsp are R", diff_series("N_Gsp", network_series_from_class(r.Gsp, true), r.R, 0, p - 2));
    {
        std::vector<Mismatch> bad;
        r.Gsp.for_each_term([&](int n, int m, const Rational &g) {
            if (n <= p && g > r.P.coeff(n, m)) {
                bad.push_back({"Gsp<=P", n, std::to_string(m), "<= " + str(r.P.coeff(n, m)), str(g)});
            }
        });
        c.check("Gsp(n,m) <= P(n,m)", bad);
    }
    {
        std::vector<Mismatch> bad = diff_series("CF(5)", r.CF, r.F, 5, 5);
        r.F.for_each_term([&](int n, int m, const Rational &f) {
            if (n <= top && r.CF.coeff(n, m) < f) {
                bad.push_back({"CF>=F", n, std::to_string(m), ">= " + str(f), str(r.CF.coeff(n, m))});
            }
        });
        c.check("CF dominates F, CF(5,.) = F(5,.)", bad);
    }

    // Exhaustive oracle agreement on small n.
    const std::array<OracleClass, 5> classes{OracleClass::P2planar, OracleClass::Gsp, OracleClass::HP, OracleClass::F,
                                             OracleClass::HF};
    for (int n = 2; n <= std::min(options.oracle_n, p); ++n) {
        OracleOptions oo;
        oo.workers = options.workers;
        const auto census = oracle_census(n, classes, oo);
        std::vector<Mismatch> bad;
        for (OracleClass cls : classes) {
            const BivarSeries *s = nullptr;
            switch (cls) {
            case OracleClass::P2planar: s = &r.P; break;
            case OracleClass::Gsp: s = &r.Gsp; break;
            case OracleClass::HP: s = &r.HP; break;
            case OracleClass::F: s = &r.F; break;
            case OracleClass::HF: s = &r.HF_inversion; break;
            }
            BivarSeries o(n);
            for (const auto &[m, count] : census.at(cls)) {
                o.set_coeff(n, m, Rational(Integer(static_cast<unsigned long>(count))));
            }
            const auto d = diff_series(std::string(to_string(cls)) + " oracle", *s, o, n, n);
            bad.insert(bad.end(), d.begin(), d.end());
        }
        c.check("oracle agreement at n=" + std::to_string(n) + " (P2planar, Gsp, HP, F, HF)", bad);
    }
    return c.finish();
}

} // namespace k33lab::cli
