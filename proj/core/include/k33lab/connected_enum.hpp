#pragma once

#include <k33lab/series.hpp>

namespace k33lab
{

struct RootedFixpoint {
    BivarSeries Cdot;
    BivarSeries Pprime;
    int nmax = 0;
};

// One step of C -> x exp(P'(C, y)).
BivarSeries rooted_step(const BivarSeries &pprime, const BivarSeries &c);

// Vertex-rooted connected planar graphs, C = x exp(P'(C, y)), iterated from
// C0 = x. Needs P to order nmax.
RootedFixpoint rooted_connected_planar(const BivarSeries &p, int nmax);

// C_F = F(Cdot, y).
BivarSeries CF_series(const BivarSeries &f, const BivarSeries &cdot, int nmax);

} // namespace k33lab
