#include <doctest.h>

#include <k33lab/oracle.hpp>
#include <k33lab/planar_basis.hpp>
#include <k33lab/reference_data.hpp>

using namespace k33lab;

TEST_CASE("shipped n = 8 planar rows agree with the live oracle")
{
    const CoefficientTable basis = embedded_planar_basis();
    REQUIRE(basis.nmax >= 8);
    OracleOptions options;
    options.workers = default_workers();
    const EdgeCounts live = enumerate_two_connected_planar(8, options);
    std::uint64_t total = 0;
    for (const auto &[m, count] : live) {
        CHECK(basis.count(8, m) == Integer(static_cast<unsigned long>(count)));
        total += count;
    }
    CHECK(basis.total(8) == Integer(static_cast<unsigned long>(total)));
    CHECK(total == 78702536);
}
