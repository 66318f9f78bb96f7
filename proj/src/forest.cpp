#include "wonderful/forest.hpp"

#include "wonderful/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wonderful {

WeightedTree WeightedTree::leaf() { return WeightedTree(); }

WeightedTree WeightedTree::node(unsigned weight, std::vector<WeightedTree> children) {
    if (children.size() < 2) throw std::invalid_argument("internal node needs at least two children");
    if (weight == 0) throw std::invalid_argument("internal node weight must be positive");
    std::sort(children.begin(), children.end());
    WeightedTree t;
    t.weight_ = weight;
    t.leaves_ = 0;
    t.total_weight_ = weight;
    t.code_ = std::to_string(weight) + "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        t.leaves_ += children[i].leaves_;
        t.total_weight_ += children[i].total_weight_;
        if (i) t.code_ += ",";
        t.code_ += children[i].code_;
    }
    t.code_ += ")";
    t.children_ = std::move(children);
    return t;
}

namespace {

// prod over groups of equal siblings of (mult! * Aut(member)^mult); input sorted
template <class T>
BigInt group_automorphisms(const std::vector<T>& sorted) {
    BigInt aut = 1;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        const auto mult = static_cast<unsigned long>(j - i);
        BigInt member = sorted[i].automorphisms();
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), member.get_mpz_t(), mult);
        aut *= factorial(mult) * p;
        i = j;
    }
    return aut;
}

}  // namespace

BigInt WeightedTree::automorphisms() const {
    if (is_leaf()) return 1;
    return group_automorphisms(children_);
}

WeightedForest::WeightedForest(std::vector<WeightedTree> trees) : trees_(std::move(trees)) {
    std::sort(trees_.begin(), trees_.end());
}

std::size_t WeightedForest::leaves() const {
    std::size_t n = 0;
    for (const auto& t : trees_) n += t.leaves();
    return n;
}

unsigned WeightedForest::total_weight() const {
    unsigned w = 0;
    for (const auto& t : trees_) w += t.total_weight();
    return w;
}

ForestType WeightedForest::type() const {
    ForestType nu;
    for (std::size_t i = 0; i < trees_.size();) {
        std::size_t j = i;
        while (j < trees_.size() && trees_[j] == trees_[i]) ++j;
        nu.push_back(static_cast<unsigned>(j - i));
        i = j;
    }
    std::sort(nu.rbegin(), nu.rend());
    return nu;
}

std::string WeightedForest::encoding() const {
    std::string s;
    for (std::size_t i = 0; i < trees_.size(); ++i) {
        if (i) s += " + ";
        s += trees_[i].encoding();
    }
    return s;
}

BigInt WeightedForest::automorphisms() const { return group_automorphisms(trees_); }

WeightedForest forest_of_nest(const Nest& s, const WeightVector& mu) {
    const auto& blocks = s.blocks();
    std::map<Block, unsigned> weight(mu.begin(), mu.end());
    // blocks are sorted by size, so building bottom-up in order sees children first
    std::map<Block, WeightedTree> built;
    std::map<Block, std::vector<Block>> kids;
    std::vector<Block> roots;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        bool has_parent = false;
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
            if ((blocks[i] & blocks[j]) == blocks[i]) {
                kids[blocks[j]].push_back(blocks[i]);
                has_parent = true;
                break;
            }
        }
        if (!has_parent) roots.push_back(blocks[i]);
    }
    for (Block b : blocks) {
        if (popcount(b) == 1) {
            built.emplace(b, WeightedTree::leaf());
            continue;
        }
        auto w = weight.find(b);
        if (w == weight.end()) throw std::invalid_argument("weight vector lacks block " + block_str(b, s.n()));
        std::vector<WeightedTree> ch;
        for (Block c : kids.at(b)) ch.push_back(built.at(c));
        built.emplace(b, WeightedTree::node(w->second, std::move(ch)));
    }
    std::vector<WeightedTree> trees;
    for (Block r : roots) trees.push_back(built.at(r));
    return WeightedForest(std::move(trees));
}

BigInt labelings_count(const WeightedForest& f, std::size_t n) {
    if (f.leaves() != n)
        throw std::invalid_argument("forest has " + std::to_string(f.leaves()) + " leaves, expected " +
                                    std::to_string(n));
    return factorial(n) / f.automorphisms();
}

namespace {

// Visits multisets drawn from pool[first..] (nondecreasing indices) with the
// given total leaf count and at least min_count members.
void multisets(const std::vector<WeightedTree>& pool, std::size_t first, std::size_t leaves_left,
               std::size_t min_count, std::vector<std::size_t>& pick,
               const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (leaves_left == 0) {
        if (pick.size() >= min_count) visit(pick);
        return;
    }
    for (std::size_t i = first; i < pool.size(); ++i) {
        if (pool[i].leaves() > leaves_left) continue;
        pick.push_back(i);
        multisets(pool, i, leaves_left - pool[i].leaves(), min_count, pick, visit);
        pick.pop_back();
    }
}

}  // namespace

std::vector<WeightedForest> enumerate_weighted_forests(std::size_t n, unsigned d, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("enumerate_weighted_forests: n must be >= 1");
    if (n > cap) throw CapExceeded("weighted forest enumeration", n, cap);

    // trees with fewer than k leaves are complete when size-k trees are built
    std::vector<WeightedTree> pool{WeightedTree::leaf()};
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<WeightedTree> fresh;
        std::vector<std::size_t> pick;
        multisets(pool, 0, k, 2, pick, [&](const std::vector<std::size_t>& idx) {
            const long top = static_cast<long>(idx.size() - 1) * d - 1;
            for (long w = 1; w <= top; ++w) {
                std::vector<WeightedTree> ch;
                for (std::size_t i : idx) ch.push_back(pool[i]);
                fresh.push_back(WeightedTree::node(static_cast<unsigned>(w), std::move(ch)));
            }
        });
        pool.insert(pool.end(), fresh.begin(), fresh.end());
    }

    std::vector<WeightedForest> out;
    std::vector<std::size_t> pick;
    multisets(pool, 0, n, 1, pick, [&](const std::vector<std::size_t>& idx) {
        std::vector<WeightedTree> trees;
        for (std::size_t i : idx) trees.push_back(pool[i]);
        out.emplace_back(std::move(trees));
    });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wonderful
