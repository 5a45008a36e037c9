#include <k33lab/series_parallel.hpp>

#include <k33lab/errors.hpp>

namespace k33lab
{

namespace
{

// exp(x R^2 / (1 + x R)), the integrand of Gsp.
BivarSeries parallel_factor(const BivarSeries &r)
{
    const BivarSeries xr = mul(BivarSeries::x(), r);
    const BivarSeries t = divide(mul(xr, r), BivarSeries::one() + xr);
    return exp(t.truncated(r.nmax()));
}

} // namespace

BivarSeries R_step(const BivarSeries &r)
{
    const BivarSeries one_plus_y = BivarSeries::polynomial({{0, 0, 1}, {0, 1, 1}});
    return (mul(one_plus_y, parallel_factor(r)) - BivarSeries::one()).truncated(r.nmax());
}

BivarSeries compute_R(int nmax)
{
    if (nmax < 0) {
        throw InputError("compute_R: negative order");
    }
    BivarSeries r(nmax);
    r.set_coeff(0, 1, 1);
    // Each step fixes one more x-slice.
    for (int k = 0; k <= nmax; ++k) {
        r = R_step(r);
    }
    require_class_counts(r, "R");
    return r;
}

std::pair<BivarSeries, BivarSeries> split_series_parallel(const BivarSeries &r)
{
    const BivarSeries xr = mul(BivarSeries::x(), r);
    const BivarSeries ppar = divide(r, BivarSeries::one() + xr).truncated(r.nmax());
    const BivarSeries s = mul(ppar, xr).truncated(r.nmax());
    require_class_counts(ppar, "Ppar");
    require_class_counts(s, "S");
    return {ppar, s};
}

BivarSeries compute_Gsp(int nmax)
{
    if (nmax < 2) {
        return BivarSeries(nmax);
    }
    const BivarSeries r = compute_R(nmax - 2);
    BivarSeries g = scale(mul_x_power(integrate_y(parallel_factor(r)), 2), Rational(1, 2));
    g = g.truncated(nmax);
    require_class_counts(g, "Gsp");
    return g;
}

SPSystem compute_sp_system(int nmax)
{
    SPSystem sys;
    sys.nmax = nmax;
    sys.R = compute_R(nmax);
    auto [ppar, s] = split_series_parallel(sys.R);
    sys.Ppar = std::move(ppar);
    sys.S = std::move(s);
    sys.Gsp = compute_Gsp(nmax);
    return sys;
}

} // namespace k33lab
