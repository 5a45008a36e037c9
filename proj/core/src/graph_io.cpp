#include <k33lab/graph_io.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include <k33lab/errors.hpp>

namespace k33lab
{

namespace
{

std::vector<std::string_view> fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

bool to_int(std::string_view s, int &value)
{
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

Graph parse_graph(std::string_view text, const std::string &source)
{
    std::optional<Graph> g;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto f = fields(line);
        if (f.empty()) {
            continue;
        }
        if (!g) {
            int n = 0;
            if (f.size() != 2 || f[0] != "n" || !to_int(f[1], n)) {
                throw ParseError(source, line_no, "expected \"n <count>\"");
            }
            if (n < 0 || n > Graph::kMaxVertices) {
                throw ParseError(source, line_no, "vertex count out of range");
            }
            g.emplace(n);
            continue;
        }
        int u = 0;
        int v = 0;
        if (f.size() != 2 || !to_int(f[0], u) || !to_int(f[1], v)) {
            throw ParseError(source, line_no, "expected \"u v\"");
        }
        if (u < 0 || u >= v || v >= g->n()) {
            throw ParseError(source, line_no, "edge must satisfy 0 <= u < v < n");
        }
        if (!g->add_edge(u, v)) {
            throw ParseError(source, line_no, "duplicate edge");
        }
    }
    if (!g) {
        throw ParseError(source, 0, "missing \"n <count>\" line");
    }
    return *g;
}

Graph read_graph_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), path);
}

std::string format_graph(const Graph &g)
{
    std::ostringstream out;
    out << "n " << g.n() << '\n';
    for (const auto &[u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
    return out.str();
}

std::string decomposition_json(const Graph &g, const DecomposeResult &result, int indent)
{
    nlohmann::ordered_json doc;
    doc["n"] = g.n();
    doc["m"] = g.m();
    doc["accepted"] = result.accepted();
    doc["reason"] = std::string(to_string(result.reason));
    if (result.decomposition) {
        const auto &d = *result.decomposition;
        doc["corners"] = d.corners;
        auto comps = nlohmann::ordered_json::array();
        for (const auto &[pair, net] : d.components) {
            nlohmann::ordered_json c;
            c["pair"] = {pair.first, pair.second};
            c["poles"] = {{"0", pair.first}, {"1", pair.second}};
            c["vertices"] = net.internal_labels;
            auto edges = nlohmann::ordered_json::array();
            for (const auto &[u, v] : net.global_edges(pair.first, pair.second)) {
                edges.push_back({u, v});
            }
            c["edges"] = std::move(edges);
            c["pole_edge"] = net.has_pole_edge();
            comps.push_back(std::move(c));
        }
        doc["components"] = std::move(comps);
    }
    return doc.dump(indent);
}

} // namespace k33lab
