#pragma once

#include <k33lab/coefficient_table.hpp>
#include <k33lab/oracle.hpp>
#include <k33lab/series.hpp>

namespace k33lab
{

inline constexpr int kPlanarOracleLimit = 8;
inline constexpr const char *kPlanarClassName = "P2planar";

// Labelled 2-connected planar graphs on n vertices by edge count (K2 counts).
// Throws SizeLimitError for n > kPlanarOracleLimit and InputError for n < 1.
EdgeCounts enumerate_two_connected_planar(int n, const OracleOptions &options = {});

// Oracle table for 2 <= n <= nmax with provenance=oracle.
CoefficientTable planar_basis_table(int nmax, const OracleOptions &options = {});

// P(x, y) to order nmax from a P2planar table. Throws BasisError naming the
// first missing n when the table stops short.
BivarSeries planar_series(const CoefficientTable &basis, int nmax);

// N_B = (1 + y) (2 / x^2) dB/dy, minus 1 when B contains K2.
// The result is known to order B.nmax() - 2.
BivarSeries network_series_from_class(const BivarSeries &b, bool includes_K2);

} // namespace k33lab
