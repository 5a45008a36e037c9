#include <k33lab/coefficient_table.hpp>

#include <fstream>
#include <sstream>
#include <vector>

#include <k33lab/errors.hpp>

namespace k33lab
{

namespace
{

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

bool parse_int(const std::string &s, int &out)
{
    if (s.empty() || s.size() > 9) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    out = std::stoi(s);
    return true;
}

int euler_cap(int n)
{
    return n == 2 ? 1 : 3 * n - 6;
}

} // namespace

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::oracle:
        return "oracle";
    case Provenance::imported:
        return "imported";
    case Provenance::computed:
        return "computed";
    }
    return "computed";
}

std::optional<Provenance> parse_provenance(std::string_view text)
{
    for (Provenance p : {Provenance::oracle, Provenance::imported, Provenance::computed}) {
        if (to_string(p) == text) {
            return p;
        }
    }
    return std::nullopt;
}

Integer CoefficientTable::count(int n, int m) const
{
    const auto it = records.find({n, m});
    return it == records.end() ? Integer(0) : it->second;
}

Integer CoefficientTable::total(int n) const
{
    Integer sum = 0;
    for (auto it = records.lower_bound({n, 0}); it != records.end() && it->first.first == n; ++it) {
        sum += it->second;
    }
    return sum;
}

std::string to_text(const CoefficientTable &t)
{
    std::ostringstream out;
    out << "# class=" << t.class_name << '\n';
    out << "# nmax=" << t.nmax << '\n';
    out << "# provenance=" << to_string(t.provenance) << '\n';
    for (const auto &[key, count] : t.records) {
        out << key.first << ' ' << key.second << ' ' << count.get_str() << '\n';
    }
    return out.str();
}

CoefficientTable parse_table(std::string_view text, const std::string &source)
{
    CoefficientTable t;
    bool have_class = false;
    bool have_nmax = false;
    std::vector<std::pair<std::pair<int, int>, int>> record_lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            const std::string body = trim(std::string_view(line).substr(1));
            const auto eq = body.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            const std::string key = trim(std::string_view(body).substr(0, eq));
            const std::string value = trim(std::string_view(body).substr(eq + 1));
            if (key == "class") {
                if (value.empty()) {
                    throw ParseError(source, line_no, "empty class name");
                }
                t.class_name = value;
                have_class = true;
            } else if (key == "nmax") {
                if (!parse_int(value, t.nmax)) {
                    throw ParseError(source, line_no, "nmax must be a non-negative integer");
                }
                have_nmax = true;
            } else if (key == "provenance") {
                const auto p = parse_provenance(value);
                if (!p) {
                    throw ParseError(source, line_no, "unknown provenance \"" + value + "\"");
                }
                t.provenance = *p;
            }
            continue;
        }

        std::istringstream fields(line);
        std::string sn;
        std::string sm;
        std::string sc;
        std::string extra;
        fields >> sn >> sm >> sc;
        int n = 0;
        int m = 0;
        if (sc.empty() || (fields >> extra) || !parse_int(sn, n) || !parse_int(sm, m)) {
            throw ParseError(source, line_no, "expected \"n m count\"");
        }
        if (sc[0] == '-') {
            throw ParseError(source, line_no, "negative count");
        }
        Integer count;
        if (sc.find_first_not_of("0123456789") != std::string::npos || count.set_str(sc, 10) != 0) {
            throw ParseError(source, line_no, "count is not a decimal integer");
        }
        if (!t.records.emplace(std::pair{n, m}, count).second) {
            throw ParseError(source, line_no,
                             "duplicate record " + std::to_string(n) + " " + std::to_string(m));
        }
        record_lines.push_back({{n, m}, line_no});
    }
    if (!have_class) {
        throw ParseError(source, 0, "missing \"# class=\" header");
    }
    if (!have_nmax) {
        throw ParseError(source, 0, "missing \"# nmax=\" header");
    }
    for (const auto &[key, line] : record_lines) {
        if (key.first > t.nmax) {
            throw ParseError(source, line, "record beyond nmax");
        }
        if (t.class_name == "P2planar" && key.first >= 2 && key.second > euler_cap(key.first)
            && t.records.at(key) != 0) {
            throw ParseError(source, line, "count above the planar edge bound");
        }
    }
    if (t.class_name == "P2planar" && t.nmax >= 2 && t.count(2, 1) != 1) {
        throw ParseError(source, 0, "P2planar needs the record 2 1 1");
    }
    return t;
}

void save_table(const CoefficientTable &t, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError(path, 0, "cannot open file for writing");
    }
    out << to_text(t);
    if (!out) {
        throw ParseError(path, 0, "write failed");
    }
}

CoefficientTable load_table(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_table(buf.str(), path);
}

CoefficientTable table_from_series(const BivarSeries &s, std::string class_name, Provenance provenance,
                                   std::optional<int> nmax)
{
    const int order = nmax.value_or(s.nmax());
    if (order > s.nmax()) {
        throw InputError("table order " + std::to_string(order) + " exceeds series order "
                         + std::to_string(s.nmax()));
    }
    CoefficientTable t;
    t.class_name = std::move(class_name);
    t.nmax = order;
    t.provenance = provenance;
    const BivarSeries cut = s.truncated(order);
    require_class_counts(cut, t.class_name);
    cut.for_each_term([&](int n, int m, const Rational &c) { t.records.emplace(std::pair{n, m}, c.get_num()); });
    return t;
}

BivarSeries series_from_table(const CoefficientTable &t)
{
    BivarSeries s(t.nmax);
    for (const auto &[key, count] : t.records) {
        s.set_coeff(key.first, key.second, Rational(count));
    }
    return s;
}

} // namespace k33lab
