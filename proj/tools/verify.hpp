#pragma once

#include <iosfwd>
#include <string>

#include <k33lab/coefficient_table.hpp>

namespace k33lab::cli
{

struct VerifyOptions {
    // Order of P taken from the basis; defaults to its nmax.
    int p = 0;
    // Highest n for the exhaustive oracle agreement checks.
    int oracle_n = 6;
    int workers = 1;
};

struct VerifyReport {
    int checks = 0;
    int failures = 0;
};

// Recomputes every class from the basis and diffs against the shipped
// reference values and the cross-method identities. One line per check.
VerifyReport run_verification(const CoefficientTable &basis, const VerifyOptions &options, std::ostream &out);

} // namespace k33lab::cli
