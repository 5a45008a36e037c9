#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k33lab::cli
{

enum ExitCode : int {
    exit_ok = 0,
    exit_io = 1,
    exit_limits = 2,
    exit_mismatch = 3,
};

// Runs one command line (without the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace k33lab::cli
