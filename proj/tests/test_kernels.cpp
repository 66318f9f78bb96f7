#include <doctest.h>

#include "wonderful/errors.hpp"
#include "wonderful/kernels.hpp"
#include "wonderful/nest.hpp"

using namespace wonderful;

TEST_CASE("parallel census equals the serial reference") {
    for (std::size_t n = 1; n <= 8; ++n) CHECK(nest_census_parallel(n) == nest_census_serial(n));
}

TEST_CASE("census totals are the nest counts") {
    const std::uint64_t counts[] = {0, 1, 2, 8, 52, 472, 5504, 78416, 1320064};
    for (std::size_t n = 1; n <= 8; ++n) CHECK(census_total(nest_census_parallel(n)) == counts[n]);
}

TEST_CASE("weight table equals a direct sum over nests") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 3; ++d) {
            std::vector<IntPoly> direct(n + 1);
            for_each_nest(n, [&](const Nest& s) { direct[nest_stats(s).components] += nest_weight_poly(s, d); });
            CHECK(census_weight_table(nest_census_parallel(n), n, d) == direct);
        }
}

TEST_CASE("census respects the cap") {
    CHECK_THROWS_AS(nest_census_parallel(10), CapExceeded);
    CHECK_THROWS_AS(nest_census_serial(5, 4), CapExceeded);
}
