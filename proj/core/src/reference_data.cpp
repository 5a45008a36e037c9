#include <k33lab/reference_data.hpp>

#include <k33lab/errors.hpp>

#include "embedded_data.hpp"

namespace k33lab
{

namespace
{

CoefficientTable embedded(const std::string &stem)
{
    const auto &files = detail::embedded_files();
    const auto it = files.find(stem);
    if (it == files.end()) {
        throw InputError("no embedded table " + stem);
    }
    return parse_table(it->second, stem + ".tbl");
}

} // namespace

CoefficientTable embedded_planar_basis()
{
    return embedded("P2planar_oracle_n8");
}

CoefficientTable reference_table(const std::string &name)
{
    return embedded("ref_" + name);
}

std::vector<std::string> reference_table_names()
{
    return {"F", "F_n", "HP", "HP_n", "HF", "HF_n", "CF_n"};
}

} // namespace k33lab
