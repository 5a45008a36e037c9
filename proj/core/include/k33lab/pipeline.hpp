#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <k33lab/coefficient_table.hpp>
#include <k33lab/series.hpp>

namespace k33lab
{

// Every class series derived from one P basis known to order p.
struct PipelineResult {
    int p = 0;
    BivarSeries P;
    BivarSeries NP;
    BivarSeries R;
    BivarSeries S;
    BivarSeries Ppar;
    BivarSeries Gsp;
    BivarSeries F;
    BivarSeries HP;
    BivarSeries HF_inversion;
    BivarSeries HF_legs;
    BivarSeries Cdot;
    BivarSeries CF;
};

// P to p gives P, HP, Gsp, Cdot to p and F, HF, CF to p + 3.
PipelineResult run_pipeline(const CoefficientTable &basis, std::optional<int> p = std::nullopt);

// Class names accepted by class_series / required_basis_order.
const std::vector<std::string> &series_class_names();

// Smallest P order that determines `name` to order nmax; 0 for the
// basis-free series-parallel classes.
int required_basis_order(std::string_view name, int nmax);

// One class to order nmax, computing only what it depends on.
BivarSeries class_series(std::string_view name, int nmax, const CoefficientTable &basis);

} // namespace k33lab
