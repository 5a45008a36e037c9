#include <k33lab/connected_enum.hpp>

#include <algorithm>
#include <string>

#include <k33lab/errors.hpp>

namespace k33lab
{

BivarSeries rooted_step(const BivarSeries &pprime, const BivarSeries &c)
{
    const int order = c.nmax();
    const BivarSeries inner = compose_x(pprime, c).truncated(std::min(order, pprime.nmax()));
    return mul(BivarSeries::x(), exp(inner)).truncated(order);
}

RootedFixpoint rooted_connected_planar(const BivarSeries &p, int nmax)
{
    if (nmax < 1) {
        throw InputError("rooted_connected_planar: order must be at least 1");
    }
    if (p.nmax() < nmax) {
        throw BasisError("insufficient basis: rooted connected planar graphs to order " + std::to_string(nmax)
                             + " need P(n,m) up to n = " + std::to_string(nmax) + "; first missing n = "
                             + std::to_string(p.nmax() + 1),
                         p.nmax() + 1);
    }
    RootedFixpoint fp;
    fp.nmax = nmax;
    fp.Pprime = deriv_x(p.truncated(nmax));
    BivarSeries c(nmax);
    c.set_coeff(1, 0, 1);
    for (int k = 0; k <= nmax; ++k) {
        c = rooted_step(fp.Pprime, c);
    }
    require_class_counts(c, "Cdot");
    fp.Cdot = std::move(c);
    return fp;
}

BivarSeries CF_series(const BivarSeries &f, const BivarSeries &cdot, int nmax)
{
    BivarSeries cf = compose_x(f, cdot);
    if (cf.nmax() < nmax) {
        throw BasisError("C_F is known only to order " + std::to_string(cf.nmax()), cf.nmax() + 1);
    }
    cf = cf.truncated(nmax);
    require_class_counts(cf, "CF");
    return cf;
}

} // namespace k33lab
