#pragma once

#include <k33lab/series.hpp>

namespace k33lab
{

// x^5 y^10 / 5!
BivarSeries K5_series();

// 2 y x + y^2 x^2: a pendant pole edge, optionally with the edge to its new neighbour.
BivarSeries leg_series();

// F = K5(x, N_P). Needs N_P to order nmax - 5 (P to nmax - 3).
BivarSeries F_series(const BivarSeries &np, int nmax);

// Solve B(x, y) = H(x, R(x, y)) for H. R must be y at x^0.
struct InversionProblem {
    BivarSeries B;
    BivarSeries R;
    int nmax = 0;
};

// H = sum_i (-1)^i Delta_R^i B with Delta_R F = F(x, R) - F(x, y).
BivarSeries invert_substitution(const InversionProblem &p);

// P = Gsp + H_P(x, R). K2 cancels in P - Gsp, so H_P excludes it.
BivarSeries HP_series(const BivarSeries &p, const BivarSeries &gsp, const BivarSeries &r, int nmax);

// F = H_F(x, R).
BivarSeries HF_series_inversion(const BivarSeries &f, const BivarSeries &r, int nmax);

// N_HP = (1 + y)(2/x^2) dH_P/dy (no constant: H_P has no K2),
// N_l = (1 + Leg) / (1 - y Leg) N_HP, H_F = K5(x, N_l + y).
// Needs H_P to order nmax - 3.
BivarSeries HF_series_legs(const BivarSeries &hp, int nmax);

} // namespace k33lab
