#include "wonderful/kernels.hpp"

#include "wonderful/errors.hpp"
#include "wonderful/exp_series.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <unordered_map>

namespace wonderful {

NestCensus nest_census_serial(std::size_t n, std::size_t cap) {
    NestCensus census;
    for_each_nest(n, [&](const Nest& s) {
        const NestStats st = nest_stats(s);
        std::vector<unsigned> cs;
        cs.reserve(st.children.size());
        for (const auto& [block, c] : st.children) cs.push_back(c);
        std::sort(cs.begin(), cs.end());
        ++census[{st.components, std::move(cs)}];
    }, cap);
    return census;
}

namespace {

// Packed shape: 4 bits for c, then 4 bits per child-count value 2..12 holding
// how many internal blocks have that count. Fits n <= 12 (every field <= 12).
constexpr std::size_t kPackedMaxN = 12;
using Packed = std::uint64_t;
using Counts = std::array<std::uint8_t, kPackedMaxN + 1>;

Packed pack(std::size_t components, const Counts& counts) {
    Packed key = components;
    for (std::size_t c = 2; c <= kPackedMaxN; ++c) key |= static_cast<Packed>(counts[c]) << (4 * (c - 1));
    return key;
}

NestShape unpack(Packed key) {
    NestShape shape;
    shape.first = key & 0xF;
    for (std::size_t c = 2; c <= kPackedMaxN; ++c) {
        const auto times = (key >> (4 * (c - 1))) & 0xF;
        for (Packed t = 0; t < times; ++t) shape.second.push_back(static_cast<unsigned>(c));
    }
    return shape;
}

struct PartitionCache {
    // parts[mask] = partitions of mask into >= 2 blocks
    std::vector<std::vector<SetPartition>> parts;

    explicit PartitionCache(std::size_t n) : parts(std::size_t{1} << n) {
        for (Block mask = 1; mask < parts.size(); ++mask) {
            if (popcount(mask) < 2) continue;
            for_each_partition_of(mask, 2, [&](const SetPartition& p) { parts[mask].push_back(p); });
        }
    }
};

class Refiner {
public:
    Refiner(const PartitionCache& cache, std::unordered_map<Packed, std::uint64_t>& out)
        : cache_(cache), out_(out) {}

    void run(const SetPartition& roots) {
        pending_.assign(roots.begin(), roots.end());
        counts_.fill(0);
        components_ = roots.size();
        step();
    }

private:
    void step() {
        // singletons need no refinement
        std::size_t popped = 0;
        std::array<Block, 32> stash{};
        while (!pending_.empty() && popcount(pending_.back()) == 1) {
            stash[popped++] = pending_.back();
            pending_.pop_back();
        }
        if (pending_.empty()) {
            ++out_[pack(components_, counts_)];
        } else {
            const Block b = pending_.back();
            pending_.pop_back();
            for (const SetPartition& parts : cache_.parts[b]) {
                ++counts_[parts.size()];
                const std::size_t base = pending_.size();
                pending_.insert(pending_.end(), parts.begin(), parts.end());
                step();
                pending_.resize(base);
                --counts_[parts.size()];
            }
            pending_.push_back(b);
        }
        while (popped) pending_.push_back(stash[--popped]);
    }

    const PartitionCache& cache_;
    std::unordered_map<Packed, std::uint64_t>& out_;
    std::vector<Block> pending_;
    Counts counts_{};
    std::size_t components_ = 0;
};

}  // namespace

NestCensus nest_census_parallel(std::size_t n, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("nest_census_parallel: n must be >= 1");
    if (n > cap) throw CapExceeded("nest enumeration", n, cap);
    if (n > kPackedMaxN) throw CapExceeded("packed nest census", n, kPackedMaxN);

    const std::vector<SetPartition> roots = enumerate_partitions(n, std::max(n, kDefaultPartitionCap));
    const PartitionCache cache(n);
    std::unordered_map<Packed, std::uint64_t> merged;

#pragma omp parallel
    {
        std::unordered_map<Packed, std::uint64_t> local;
        Refiner refiner(cache, local);
#pragma omp for schedule(dynamic, 1)
        for (std::size_t r = 0; r < roots.size(); ++r) refiner.run(roots[r]);
#pragma omp critical(wonderful_census_merge)
        for (const auto& [key, count] : local) merged[key] += count;
    }

    NestCensus census;
    for (const auto& [key, count] : merged) census[unpack(key)] += count;
    return census;
}

std::vector<IntPoly> census_weight_table(const NestCensus& census, std::size_t n, unsigned d) {
    std::vector<IntPoly> table(n + 1);
    for (const auto& [shape, count] : census) {
        IntPoly p(BigInt(static_cast<unsigned long>(count)));
        for (unsigned c : shape.second) p *= sigma(c - 1, d);
        table.at(shape.first) += p;
    }
    return table;
}

std::uint64_t census_total(const NestCensus& census) {
    std::uint64_t total = 0;
    for (const auto& [shape, count] : census) total += count;
    return total;
}

}  // namespace wonderful
