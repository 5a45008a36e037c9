#include <k33lab/planar_basis.hpp>

#include <string>

#include <k33lab/errors.hpp>

namespace k33lab
{

EdgeCounts enumerate_two_connected_planar(int n, const OracleOptions &options)
{
    if (n < 1) {
        throw InputError("vertex count must be at least 1");
    }
    if (n > kPlanarOracleLimit) {
        throw SizeLimitError("the planar oracle is exhaustive over 2^C(n,2) graphs and stops at n = "
                             + std::to_string(kPlanarOracleLimit));
    }
    return oracle_count(OracleClass::P2planar, n, options);
}

CoefficientTable planar_basis_table(int nmax, const OracleOptions &options)
{
    CoefficientTable t;
    t.class_name = kPlanarClassName;
    t.nmax = nmax;
    t.provenance = Provenance::oracle;
    for (int n = 2; n <= nmax; ++n) {
        for (const auto &[m, count] : enumerate_two_connected_planar(n, options)) {
            t.records.emplace(std::pair{n, m}, Integer(static_cast<unsigned long>(count)));
        }
    }
    return t;
}

BivarSeries planar_series(const CoefficientTable &basis, int nmax)
{
    if (basis.class_name != kPlanarClassName) {
        throw InputError("expected a " + std::string(kPlanarClassName) + " table, got class "
                         + basis.class_name);
    }
    if (basis.nmax < nmax) {
        throw BasisError("insufficient basis: P(n,m) is needed up to n = " + std::to_string(nmax)
                             + " but the table stops at n = " + std::to_string(basis.nmax)
                             + "; first missing n = " + std::to_string(basis.nmax + 1),
                         basis.nmax + 1);
    }
    BivarSeries p(nmax);
    for (const auto &[key, count] : basis.records) {
        if (key.first <= nmax) {
            p.set_coeff(key.first, key.second, Rational(count));
        }
    }
    return p;
}

BivarSeries network_series_from_class(const BivarSeries &b, bool includes_K2)
{
    if (b.nmax() < 2) {
        throw InputError("network series needs the class to order at least 2");
    }
    if (includes_K2 && b.coeff(2, 1) != 1) {
        throw InputError("class flagged as containing K2 has no (2,1) term");
    }
    const BivarSeries one_plus_y = BivarSeries::polynomial({{0, 0, 1}, {0, 1, 1}});
    BivarSeries n = mul(one_plus_y, scale(div_x_power(deriv_y(b), 2), 2));
    if (includes_K2) {
        n -= BivarSeries::one();
    }
    return n;
}

} // namespace k33lab
