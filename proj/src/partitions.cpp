#include "wonderful/partitions.hpp"

#include "wonderful/errors.hpp"

namespace wonderful {

namespace {

// RGS recursion: element position `pos` joins an existing block or opens one.
void rgs(const std::vector<int>& elems, std::size_t pos, SetPartition& blocks, std::size_t min_blocks,
         const std::function<void(const SetPartition&)>& visit) {
    if (pos == elems.size()) {
        if (blocks.size() >= min_blocks) visit(blocks);
        return;
    }
    // not enough elements left to reach min_blocks
    if (blocks.size() + (elems.size() - pos) < min_blocks) return;
    const Block bit = Block{1} << elems[pos];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        blocks[b] |= bit;
        rgs(elems, pos + 1, blocks, min_blocks, visit);
        blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    rgs(elems, pos + 1, blocks, min_blocks, visit);
    blocks.pop_back();
}

}  // namespace

void for_each_partition_of(Block mask, std::size_t min_blocks,
                           const std::function<void(const SetPartition&)>& visit) {
    std::vector<int> elems;
    for (int i = 0; i < 32; ++i)
        if (mask & (Block{1} << i)) elems.push_back(i);
    SetPartition blocks;
    blocks.reserve(elems.size());
    rgs(elems, 0, blocks, min_blocks, visit);
}

void for_each_partition(std::size_t n, const std::function<void(const SetPartition&)>& visit, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("for_each_partition: n must be >= 1");
    if (n > cap) throw CapExceeded("set partition enumeration", n, cap);
    if (n > 31) throw CapExceeded("set partition enumeration (bitset width)", n, 31);
    const Block all = (Block{1} << n) - 1;
    for_each_partition_of(all, 1, visit);
}

std::vector<SetPartition> enumerate_partitions(std::size_t n, std::size_t cap) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace wonderful
