#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace wonderful {

inline constexpr std::size_t kDefaultPartitionCap = 12;

/// A subset of {1..n} stored as a bitset; element i occupies bit i-1.
using Block = std::uint32_t;

/// Set partition of {1..n} as blocks, each block a bitset, listed in order of
/// their smallest element.
using SetPartition = std::vector<Block>;

/// Visits every set partition of {1..n} exactly once, in restricted-growth-
/// string order. Throws CapExceeded above cap.
void for_each_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit,
                        std::size_t cap = kDefaultPartitionCap);

std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t cap = kDefaultPartitionCap);

/// Visits every partition of the elements of `mask` into at least `min_blocks`
/// blocks, in restricted-growth-string order over the ascending elements.
void for_each_partition_of(Block mask, std::size_t min_blocks,
                           const std::function<void(const SetPartition&)>& visit);

inline int popcount(Block b) { return __builtin_popcount(b); }

}  // namespace wonderful
