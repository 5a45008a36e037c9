#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <k33lab/graph.hpp>

namespace k33lab
{

enum class OracleClass {
    P2planar, // 2-connected planar, K2 included
    Gsp,      // 2-connected series-parallel, K2 included
    HP,       // 2-connected planar with minimum degree 3
    F,        // accepted by decompose
    HF,       // F with minimum degree 3
};

std::string_view to_string(OracleClass c);
std::optional<OracleClass> parse_oracle_class(std::string_view name);

inline constexpr int kOracleLimit = 8;

struct OracleOptions {
    int workers = 1;
    // Test planarity before 2-connectivity; only the cost changes.
    bool planarity_first = false;
};

// Number of labelled graphs on n vertices in the class, keyed by edge count.
using EdgeCounts = std::map<int, std::uint64_t>;

// Exhaustive classification of all graphs on {0..n-1} with at most 3n - 6
// edges (no bound for n <= 5). Throws SizeLimitError above kOracleLimit.
EdgeCounts oracle_count(OracleClass c, int n, const OracleOptions &options = {});

// Several classes in one sweep.
std::map<OracleClass, EdgeCounts> oracle_census(int n, std::span<const OracleClass> classes,
                                                const OracleOptions &options = {});

// The members themselves, in mask order. Limited to n <= 7.
std::vector<Graph> collect_members(OracleClass c, int n);

// K33LAB_WORKERS if set and positive, else 1.
int default_workers();

} // namespace k33lab
