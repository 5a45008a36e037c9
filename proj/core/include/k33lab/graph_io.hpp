#pragma once

#include <string>
#include <string_view>

#include <k33lab/decomposition.hpp>
#include <k33lab/graph.hpp>

namespace k33lab
{

// Text format: '#' comments and blank lines anywhere, first content line
// "n <count>", then one "u v" line per edge with 0 <= u < v < n.
Graph parse_graph(std::string_view text, const std::string &source = "<input>");
Graph read_graph_file(const std::string &path);
std::string format_graph(const Graph &g);

// accepted, reason, corners and the per-pair components with global edge lists.
std::string decomposition_json(const Graph &g, const DecomposeResult &result, int indent = 2);

} // namespace k33lab
