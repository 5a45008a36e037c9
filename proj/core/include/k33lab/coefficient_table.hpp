#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <k33lab/series.hpp>

namespace k33lab
{

enum class Provenance {
    oracle,
    imported,
    computed,
};

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view text);

// Persisted (n, m) -> count records for one class, valid for n <= nmax.
// Absent keys are zero counts.
struct CoefficientTable {
    std::string class_name;
    int nmax = 0;
    Provenance provenance = Provenance::computed;
    std::map<std::pair<int, int>, Integer> records;

    Integer count(int n, int m) const;
    // Sum over m of the records at n.
    Integer total(int n) const;

    friend bool operator==(const CoefficientTable &, const CoefficientTable &) = default;
};

// Header lines "# class=", "# nmax=", "# provenance=", then "n m count"
// records in increasing (n, m) order.
std::string to_text(const CoefficientTable &t);

// Blank lines and other '#' lines are skipped. Malformed records, duplicate
// keys, negative counts, records past nmax and (for class P2planar) counts
// outside the Euler bound raise ParseError with the line number.
CoefficientTable parse_table(std::string_view text, const std::string &source = "<table>");

void save_table(const CoefficientTable &t, const std::string &path);
CoefficientTable load_table(const std::string &path);

// Records of a class-valued series; throws IntegralityError on fractional or
// negative coefficients. nmax defaults to the series order.
CoefficientTable table_from_series(const BivarSeries &s, std::string class_name, Provenance provenance,
                                   std::optional<int> nmax = std::nullopt);
BivarSeries series_from_table(const CoefficientTable &t);

} // namespace k33lab
