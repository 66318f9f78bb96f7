#include <doctest.h>

#include "wonderful/errors.hpp"
#include "wonderful/partitions.hpp"

#include <set>
#include <vector>

using namespace wonderful;

namespace {

// Bell numbers from the Bell triangle.
std::vector<long> bell_triangle(std::size_t upto) {
    std::vector<long> bell{1};
    std::vector<long> row{1};
    for (std::size_t n = 1; n <= upto; ++n) {
        std::vector<long> next{row.back()};
        for (long v : row) next.push_back(next.back() + v);
        bell.push_back(row.back());
        row = next;
    }
    return bell;
}

}  // namespace

TEST_CASE("partition counts are the Bell numbers") {
    const auto bell = bell_triangle(10);
    for (std::size_t n = 1; n <= 10; ++n) {
        std::size_t count = 0;
        for_each_partition(n, [&](const SetPartition&) { ++count; });
        CHECK(count == static_cast<std::size_t>(bell[n]));
    }
}

TEST_CASE("partitions cover the ground set disjointly and are distinct") {
    for (std::size_t n = 1; n <= 7; ++n) {
        std::set<std::set<Block>> seen;
        for (const auto& p : enumerate_partitions(n)) {
            Block all = 0;
            for (Block b : p) {
                CHECK((all & b) == 0);
                all |= b;
            }
            CHECK(all == (Block{1} << n) - 1);
            CHECK(seen.insert(std::set<Block>(p.begin(), p.end())).second);
        }
    }
}

TEST_CASE("partitions of a mask with a minimum block count") {
    // Stirling numbers S(5,k): 1 15 25 10 1; at least two blocks gives 51
    std::size_t count = 0;
    for_each_partition_of(0b11111, 2, [&](const SetPartition& p) {
        CHECK(p.size() >= 2);
        ++count;
    });
    CHECK(count == 51);
    count = 0;
    for_each_partition_of(0b10110, 1, [&](const SetPartition&) { ++count; });
    CHECK(count == 5);
}

TEST_CASE("partition cap") {
    CHECK_THROWS_AS(for_each_partition(13, [](const SetPartition&) {}), CapExceeded);
    CHECK_NOTHROW(for_each_partition(3, [](const SetPartition&) {}, 3));
}
