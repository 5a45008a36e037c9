#include <k33lab/pipeline.hpp>

#include <algorithm>
#include <string>
#include <tuple>

#include <k33lab/connected_enum.hpp>
#include <k33lab/errors.hpp>
#include <k33lab/planar_basis.hpp>
#include <k33lab/projective_enum.hpp>
#include <k33lab/series_parallel.hpp>

namespace k33lab
{

PipelineResult run_pipeline(const CoefficientTable &basis, std::optional<int> p)
{
    PipelineResult out;
    out.p = p.value_or(basis.nmax);
    if (out.p < 2) {
        throw InputError("the pipeline needs a P basis to order at least 2");
    }
    const int top = out.p + 3;
    out.P = planar_series(basis, out.p);
    out.NP = network_series_from_class(out.P, true);
    out.R = compute_R(top);
    std::tie(out.Ppar, out.S) = split_series_parallel(out.R);
    out.Gsp = compute_Gsp(out.p);
    out.F = F_series(out.NP, top);
    out.HP = HP_series(out.P, out.Gsp, out.R, out.p);
    out.HF_inversion = HF_series_inversion(out.F, out.R, top);
    out.HF_legs = HF_series_legs(out.HP, top);
    out.Cdot = rooted_connected_planar(out.P, out.p).Cdot;
    out.CF = CF_series(out.F, out.Cdot, top);
    return out;
}

const std::vector<std::string> &series_class_names()
{
    static const std::vector<std::string> names{"F", "HP", "HF", "CF", "Gsp", "P", "R", "S", "Ppar"};
    return names;
}

int required_basis_order(std::string_view name, int nmax)
{
    if (name == "F" || name == "HF" || name == "CF") {
        return std::max(2, nmax - 3);
    }
    if (name == "HP" || name == "P") {
        return std::max(2, nmax);
    }
    if (name == "Gsp" || name == "R" || name == "S" || name == "Ppar") {
        return 0;
    }
    throw InputError("unknown class " + std::string(name));
}

BivarSeries class_series(std::string_view name, int nmax, const CoefficientTable &basis)
{
    if (nmax < 0) {
        throw InputError("nmax must be non-negative");
    }
    if (name == "R") {
        return compute_R(nmax);
    }
    if (name == "S" || name == "Ppar") {
        auto [ppar, s] = split_series_parallel(compute_R(nmax));
        return name == "S" ? s : ppar;
    }
    if (name == "Gsp") {
        return compute_Gsp(nmax);
    }
    const int p = required_basis_order(name, nmax);
    const BivarSeries P = planar_series(basis, p);
    if (name == "P") {
        return P.truncated(nmax);
    }
    if (name == "HP") {
        return HP_series(P, compute_Gsp(p), compute_R(p), nmax);
    }
    const BivarSeries f = F_series(network_series_from_class(P, true), p + 3).truncated(std::max(0, nmax));
    if (name == "F") {
        return f;
    }
    if (name == "HF") {
        return HF_series_inversion(f, compute_R(nmax), nmax);
    }
    if (name == "CF") {
        return CF_series(f, rooted_connected_planar(P, p).Cdot, nmax);
    }
    throw InputError("unknown class " + std::string(name));
}

} // namespace k33lab
