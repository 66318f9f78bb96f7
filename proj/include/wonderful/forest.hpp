#pragma once

#include "wonderful/int_poly.hpp"
#include "wonderful/nest.hpp"

#include <functional>
#include <string>
#include <vector>

namespace wonderful {

/// Unlabeled rooted tree whose internal nodes carry a positive weight and have
/// at least two children. Children are kept sorted by canonical encoding, so
/// two trees are isomorphic exactly when their encodings agree.
class WeightedTree {
public:
    static WeightedTree leaf();
    /// Throws std::invalid_argument on fewer than two children or weight 0.
    static WeightedTree node(unsigned weight, std::vector<WeightedTree> children);

    bool is_leaf() const { return weight_ == 0; }
    unsigned weight() const { return weight_; }
    const std::vector<WeightedTree>& children() const { return children_; }
    std::size_t leaves() const { return leaves_; }
    unsigned total_weight() const { return total_weight_; }
    /// "L" for a leaf, "w(child,child,...)" for an internal node.
    const std::string& encoding() const { return code_; }
    /// Size of the automorphism group (permutations of leaves preserving the tree).
    BigInt automorphisms() const;

    friend bool operator==(const WeightedTree& a, const WeightedTree& b) { return a.code_ == b.code_; }
    friend bool operator<(const WeightedTree& a, const WeightedTree& b) { return a.code_ < b.code_; }

private:
    WeightedTree() = default;
    unsigned weight_ = 0;
    std::vector<WeightedTree> children_;
    std::size_t leaves_ = 1;
    unsigned total_weight_ = 0;
    std::string code_ = "L";
};

/// Component-multiplicity type nu = {n_1, ..., n_r}, listed in decreasing order.
using ForestType = std::vector<unsigned>;

/// Multiset of weighted trees.
class WeightedForest {
public:
    explicit WeightedForest(std::vector<WeightedTree> trees);

    const std::vector<WeightedTree>& trees() const { return trees_; }
    std::size_t leaves() const;
    unsigned total_weight() const;
    /// Multiplicities of the distinct trees, decreasing.
    ForestType type() const;
    /// Trees' encodings joined by " + " in canonical order.
    std::string encoding() const;
    BigInt automorphisms() const;

    friend bool operator==(const WeightedForest& a, const WeightedForest& b) { return a.trees_ == b.trees_; }
    friend bool operator<(const WeightedForest& a, const WeightedForest& b) { return a.trees_ < b.trees_; }

private:
    std::vector<WeightedTree> trees_;
};

/// Erases the labels of (S, mu), keeping weights on the internal nodes.
WeightedForest forest_of_nest(const Nest& s, const WeightVector& mu);

/// Number of labeled pairs (S, mu) on {1..n} whose unlabeled image is f:
/// n! / |Aut(f)|, with Aut computed recursively from identical sibling groups.
BigInt labelings_count(const WeightedForest& f, std::size_t n);

/// Every unlabeled weighted forest with n leaves whose internal node with c
/// children carries a weight in [1, (c-1)d - 1], each exactly once, in
/// canonical order. Throws CapExceeded above cap.
std::vector<WeightedForest> enumerate_weighted_forests(std::size_t n, unsigned d,
                                                       std::size_t cap = kDefaultNestCap);

}  // namespace wonderful
