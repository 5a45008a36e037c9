#include <k33lab/projective_enum.hpp>

#include <string>

#include <k33lab/errors.hpp>
#include <k33lab/planar_basis.hpp>

namespace k33lab
{

namespace
{

void require_order(const BivarSeries &s, int needed, const std::string &what)
{
    if (s.nmax() < needed) {
        throw BasisError(what + " is known to order " + std::to_string(s.nmax()) + ", order "
                             + std::to_string(needed) + " is required",
                         s.nmax() + 1);
    }
}

} // namespace

BivarSeries K5_series()
{
    return BivarSeries::polynomial({{5, 10, 1}});
}

BivarSeries leg_series()
{
    return BivarSeries::polynomial({{1, 1, 2}, {2, 2, 2}});
}

BivarSeries F_series(const BivarSeries &np, int nmax)
{
    require_order(np, nmax - 5, "N_P (F needs P to order " + std::to_string(nmax - 3) + ")");
    BivarSeries f = compose_y(K5_series(), np.truncated(std::max(0, std::min(np.nmax(), nmax - 5))));
    f = f.truncated(nmax);
    require_class_counts(f, "F");
    return f;
}

BivarSeries invert_substitution(const InversionProblem &p)
{
    const EdgePoly &r0 = p.R.slice(0);
    if (r0.size() != 2 || sgn(r0[0]) != 0 || r0[1] != 1) {
        throw InputError("invert_substitution: the inner series must be exactly y at x^0");
    }
    require_order(p.B, p.nmax, "inversion input");
    require_order(p.R, p.nmax, "inner series R");
    PowerTable powers(p.R.truncated(p.nmax), p.nmax);
    BivarSeries h(p.nmax);
    BivarSeries term = p.B.truncated(p.nmax);
    bool negative = false;
    // Delta_R raises the x-valuation by at least one, so this stops after nmax + 1 rounds.
    while (term.valuation() <= p.nmax) {
        if (negative) {
            h -= term;
        } else {
            h += term;
        }
        term = (compose_y(term, powers) - term).truncated(p.nmax);
        negative = !negative;
    }
    return h;
}

BivarSeries HP_series(const BivarSeries &p, const BivarSeries &gsp, const BivarSeries &r, int nmax)
{
    require_order(p, nmax, "P");
    require_order(gsp, nmax, "Gsp");
    BivarSeries hp = invert_substitution({(p - gsp).truncated(nmax), r, nmax});
    require_class_counts(hp, "HP");
    return hp;
}

BivarSeries HF_series_inversion(const BivarSeries &f, const BivarSeries &r, int nmax)
{
    BivarSeries hf = invert_substitution({f.truncated(std::min(f.nmax(), nmax)), r, nmax});
    require_class_counts(hf, "HF");
    return hf;
}

BivarSeries HF_series_legs(const BivarSeries &hp, int nmax)
{
    require_order(hp, nmax - 3, "H_P");
    const int net_order = std::max(0, nmax - 5);
    const BivarSeries nhp = network_series_from_class(hp.truncated(std::max(2, nmax - 3)), false);
    const BivarSeries leg = leg_series();
    // Truncate the exact factors first so the quotient is finite.
    const BivarSeries num = (BivarSeries::one() + leg).truncated(net_order);
    const BivarSeries den = (BivarSeries::one() - mul(BivarSeries::y(), leg)).truncated(net_order);
    BivarSeries nl = mul(divide(num, den), nhp).truncated(std::min(net_order, nhp.nmax()));
    BivarSeries hf = compose_y(K5_series(), nl + BivarSeries::y()).truncated(nmax);
    require_class_counts(hf, "HF");
    return hf;
}

} // namespace k33lab
