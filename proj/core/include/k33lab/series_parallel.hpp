#pragma once

#include <utility>

#include <k33lab/series.hpp>

namespace k33lab
{

// Series-parallel networks R = S + Ppar and series-parallel graphs Gsp.
struct SPSystem {
    BivarSeries R;
    BivarSeries S;
    BivarSeries Ppar;
    BivarSeries Gsp;
    int nmax = 0;
};

// Fixed point of R = (1 + y) exp(x R^2 / (1 + x R)) - 1 from R0 = y.
BivarSeries compute_R(int nmax);

// One step of the fixed-point map, for stability checks.
BivarSeries R_step(const BivarSeries &r);

// (Ppar, S) with Ppar = R / (1 + x R) and S = Ppar x R.
std::pair<BivarSeries, BivarSeries> split_series_parallel(const BivarSeries &r);

// Gsp = (x^2 / 2) * integral_0^y exp(x R^2 / (1 + x R)) dt.
BivarSeries compute_Gsp(int nmax);

SPSystem compute_sp_system(int nmax);

} // namespace k33lab
