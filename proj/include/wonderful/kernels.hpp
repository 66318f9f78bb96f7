#pragma once

#include "wonderful/int_poly.hpp"
#include "wonderful/nest.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace wonderful {

/// Number of nests of {1..n} per shape: (number of components c, sorted list
/// of child counts c_I over the internal blocks). The weight polynomial of a
/// nest depends only on its shape, so the census determines every direct
/// enumeration table.
using NestShape = std::pair<std::size_t, std::vector<unsigned>>;
using NestCensus = std::map<NestShape, std::uint64_t>;

/// Reference kernel: walks for_each_nest and classifies each Nest with
/// nest_stats.
NestCensus nest_census_serial(std::size_t n, std::size_t cap = kDefaultNestCap);

/// OpenMP kernel: shards on the maximal-block partition and refines blocks on
/// raw bitsets with packed shape keys. Result is independent of thread count.
NestCensus nest_census_parallel(std::size_t n, std::size_t cap = kDefaultNestCap);

/// table[k] = sum over nests with k components of prod sigma(c_I - 1, d),
/// for k = 0..n (table[0] is always zero).
std::vector<IntPoly> census_weight_table(const NestCensus& census, std::size_t n, unsigned d);

std::uint64_t census_total(const NestCensus& census);

}  // namespace wonderful
