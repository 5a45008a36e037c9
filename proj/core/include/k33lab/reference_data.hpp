#pragma once

#include <string>
#include <vector>

#include <k33lab/coefficient_table.hpp>

namespace k33lab
{

// The shipped P2planar oracle table (n <= 8).
CoefficientTable embedded_planar_basis();

// Published reference values: "F", "HP", "HF" by (n, m); "F_n", "HP_n",
// "HF_n", "CF_n" hold totals in the m = 0 column.
CoefficientTable reference_table(const std::string &name);
std::vector<std::string> reference_table_names();

} // namespace k33lab
