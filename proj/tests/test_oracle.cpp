#include <doctest.h>

#include <array>
#include <cstdlib>

#include <k33lab/decomposition.hpp>
#include <k33lab/errors.hpp>
#include <k33lab/oracle.hpp>
#include <k33lab/series_parallel.hpp>

using namespace k33lab;

namespace
{

std::uint64_t sum(const EdgeCounts &c)
{
    std::uint64_t s = 0;
    for (const auto &[m, k] : c) {
        s += k;
    }
    return s;
}

} // namespace

TEST_CASE("class names")
{
    for (OracleClass c : {OracleClass::P2planar, OracleClass::Gsp, OracleClass::HP, OracleClass::F, OracleClass::HF}) {
        CHECK(parse_oracle_class(to_string(c)) == c);
    }
    CHECK(parse_oracle_class("P") == OracleClass::P2planar);
    CHECK_FALSE(parse_oracle_class("K33"));
}

TEST_CASE("F totals on five and six vertices")
{
    CHECK(sum(oracle_count(OracleClass::F, 5)) == 1);
    const EdgeCounts six = oracle_count(OracleClass::F, 6);
    CHECK(sum(six) == 120);
    CHECK(six.at(11) == 60);
    CHECK(six.at(12) == 60);
    CHECK(sum(oracle_count(OracleClass::HF, 6)) == 0);
}

TEST_CASE("planar totals")
{
    CHECK(sum(oracle_count(OracleClass::P2planar, 2)) == 1);
    CHECK(sum(oracle_count(OracleClass::P2planar, 3)) == 1);
    CHECK(sum(oracle_count(OracleClass::P2planar, 4)) == 10);
    CHECK(sum(oracle_count(OracleClass::P2planar, 5)) == 237);
    CHECK(sum(oracle_count(OracleClass::P2planar, 6)) == 10707);
    CHECK(sum(oracle_count(OracleClass::HP, 4)) == 1);
}

TEST_CASE("series-parallel census matches the series")
{
    const BivarSeries g = compute_Gsp(6);
    for (int n = 2; n <= 6; ++n) {
        for (const auto &[m, k] : oracle_count(OracleClass::Gsp, n)) {
            CHECK(g.coeff(n, m) == Rational(static_cast<unsigned long>(k)));
        }
    }
}

TEST_CASE("worker count and filter order do not change the census")
{
    const std::array<OracleClass, 3> classes{OracleClass::P2planar, OracleClass::F, OracleClass::HP};
    const auto one = oracle_census(6, classes, {1, false});
    const auto three = oracle_census(6, classes, {3, false});
    const auto flipped = oracle_census(6, classes, {2, true});
    CHECK(one == three);
    CHECK(one == flipped);
}

TEST_CASE("members of the degree-restricted classes")
{
    for (const Graph &g : collect_members(OracleClass::HP, 5)) {
        CHECK(g.min_degree() >= 3);
    }
    const auto f6 = collect_members(OracleClass::F, 6);
    CHECK(f6.size() == 120);
    for (const Graph &g : f6) {
        CHECK(decompose(g).accepted());
        CHECK(g.m() <= 12);
    }
    CHECK_THROWS_AS(collect_members(OracleClass::F, 8), SizeLimitError);
}

TEST_CASE("size limits")
{
    CHECK_THROWS_AS(oracle_count(OracleClass::F, kOracleLimit + 1), SizeLimitError);
    CHECK(oracle_count(OracleClass::F, 1).empty());
}

TEST_CASE("default worker count")
{
    ::setenv("K33LAB_WORKERS", "3", 1);
    CHECK(default_workers() == 3);
    ::setenv("K33LAB_WORKERS", "zero", 1);
    CHECK(default_workers() == 1);
    ::unsetenv("K33LAB_WORKERS");
    CHECK(default_workers() == 1);
}
