#pragma once

#include "wonderful/int_poly.hpp"
#include "wonderful/partitions.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wonderful {

inline constexpr std::size_t kDefaultNestCap = 9;

/// A nest of {1..n}: pairwise non-overlapping subsets containing every
/// singleton. Blocks are kept sorted by (size, bitset value), so two nests are
/// equal exactly when their block sequences are.
class Nest {
public:
    /// Validates and canonicalizes. Throws std::invalid_argument on a missing
    /// singleton, overlapping blocks, duplicates, or elements outside {1..n}.
    Nest(std::size_t n, std::vector<Block> blocks);

    /// The nest with only singletons.
    static Nest trivial(std::size_t n);
    /// Canonicalizes without validating; for enumerators that construct valid
    /// nests by design.
    static Nest assume_valid(std::size_t n, std::vector<Block> blocks) {
        return Nest(n, std::move(blocks), Unchecked{});
    }

    std::size_t n() const { return n_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    /// Non-singleton blocks, in canonical order.
    std::vector<Block> internal() const;

    /// Applies a permutation of labels: perm[i] is the image of i+1, 1-based.
    Nest relabeled(const std::vector<unsigned>& perm) const;

    /// Compact listing such as "1 2 3 23 123" (comma separated elements
    /// inside braces once n >= 10).
    std::string str() const;

    friend bool operator==(const Nest& a, const Nest& b) { return a.n_ == b.n_ && a.blocks_ == b.blocks_; }
    friend bool operator<(const Nest& a, const Nest& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.blocks_ < b.blocks_;
    }

private:
    struct Unchecked {};
    Nest(std::size_t n, std::vector<Block> blocks, Unchecked);

    std::size_t n_ = 0;
    std::vector<Block> blocks_;
};

std::string block_str(Block b, std::size_t n);

struct NestHash {
    std::size_t operator()(const Nest& s) const;
};

struct NestStats {
    std::size_t components = 0;           // c: number of maximal blocks
    std::map<Block, unsigned> children;   // c_I for every non-singleton block I
    std::vector<Block> internal;          // the non-singleton blocks
};

NestStats nest_stats(const Nest& s);

/// Visits every nest of {1..n} once. Order: maximal-block partition in
/// restricted-growth order, then depth-first refinement of each block.
/// Throws CapExceeded above cap.
void for_each_nest(std::size_t n, const std::function<void(const Nest&)>& visit, std::size_t cap = kDefaultNestCap);

std::vector<Nest> enumerate_nests(std::size_t n, std::size_t cap = kDefaultNestCap);

/// prod over internal blocks I of sigma(c_I - 1, d); 1 for the trivial nest.
IntPoly nest_weight_poly(const Nest& s, unsigned d);

/// A weight map I -> mu_I over the internal blocks, in canonical block order.
using WeightVector = std::vector<std::pair<Block, unsigned>>;

/// Visits every integer vector with 1 <= mu_I <= d(c_I - 1) - 1. Nothing is
/// visited if some range is empty; the trivial nest yields one empty vector.
void for_each_weight_vector(const Nest& s, unsigned d, const std::function<void(const WeightVector&)>& visit);

std::vector<WeightVector> enumerate_weight_vectors(const Nest& s, unsigned d);

inline unsigned weight_norm(const WeightVector& mu) {
    unsigned total = 0;
    for (const auto& [block, w] : mu) total += w;
    return total;
}

}  // namespace wonderful
