#include "wonderful/nest.hpp"

#include "wonderful/errors.hpp"
#include "wonderful/exp_series.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wonderful {

namespace {

bool canonical_less(Block a, Block b) {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
}

bool overlapped(Block a, Block b) {
    const Block m = a & b;
    return m != 0 && m != a && m != b;
}

}  // namespace

Nest::Nest(std::size_t n, std::vector<Block> blocks, Unchecked) : n_(n), blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(), canonical_less);
}

Nest::Nest(std::size_t n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 1 || n > 31) throw std::invalid_argument("nest ground set size must be in [1, 31]");
    const Block all = (Block{1} << n) - 1;
    std::sort(blocks_.begin(), blocks_.end(), canonical_less);
    if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
        throw std::invalid_argument("nest has a repeated block");
    for (Block b : blocks_) {
        if (b == 0 || (b & ~all) != 0) throw std::invalid_argument("nest block " + block_str(b, 32) + " not in [n]");
    }
    for (std::size_t i = 1; i <= n; ++i) {
        if (!std::binary_search(blocks_.begin(), blocks_.end(), Block{1} << (i - 1), canonical_less))
            throw std::invalid_argument("nest is missing singleton {" + std::to_string(i) + "}");
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        for (std::size_t j = i + 1; j < blocks_.size(); ++j)
            if (overlapped(blocks_[i], blocks_[j]))
                throw std::invalid_argument("nest blocks " + block_str(blocks_[i], n) + " and " +
                                            block_str(blocks_[j], n) + " overlap");
}

Nest Nest::trivial(std::size_t n) {
    std::vector<Block> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(Block{1} << i);
    return Nest(n, std::move(b));
}

std::vector<Block> Nest::internal() const {
    std::vector<Block> out;
    for (Block b : blocks_)
        if (popcount(b) > 1) out.push_back(b);
    return out;
}

Nest Nest::relabeled(const std::vector<unsigned>& perm) const {
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (Block b : blocks_) {
        Block img = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (b & (Block{1} << i)) img |= Block{1} << (perm.at(i) - 1);
        out.push_back(img);
    }
    return Nest(n_, std::move(out), Unchecked{});
}

std::string block_str(Block b, std::size_t n) {
    std::ostringstream os;
    const bool braces = n >= 10;
    if (braces) os << "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!(b & (Block{1} << i))) continue;
        if (braces && !first) os << ",";
        os << (i + 1);
        first = false;
    }
    if (braces) os << "}";
    return os.str();
}

std::string Nest::str() const {
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) s += ' ';
        s += block_str(blocks_[i], n_);
    }
    return s;
}

std::size_t NestHash::operator()(const Nest& s) const {
    std::size_t h = s.n();
    for (Block b : s.blocks()) h = h * 1000003U ^ b;
    return h;
}

NestStats nest_stats(const Nest& s) {
    NestStats st;
    const auto& bl = s.blocks();
    // canonical order puts smaller blocks first, so the first strict superset
    // found scanning forward is the parent
    for (std::size_t i = 0; i < bl.size(); ++i) {
        if (popcount(bl[i]) > 1) {
            st.internal.push_back(bl[i]);
            st.children.emplace(bl[i], 0U);
        }
    }
    for (std::size_t i = 0; i < bl.size(); ++i) {
        bool has_parent = false;
        for (std::size_t j = i + 1; j < bl.size(); ++j) {
            if ((bl[i] & bl[j]) == bl[i] && bl[i] != bl[j]) {
                ++st.children[bl[j]];
                has_parent = true;
                break;
            }
        }
        if (!has_parent) ++st.components;
    }
    return st;
}

namespace {

void expand(std::vector<Block>& pending, std::vector<Block>& chosen, std::size_t n,
            const std::function<void(const Nest&)>& visit);

void expand_block(Block b, std::vector<Block>& pending, std::vector<Block>& chosen, std::size_t n,
                  const std::function<void(const Nest&)>& visit) {
    chosen.push_back(b);
    if (popcount(b) == 1) {
        expand(pending, chosen, n, visit);
    } else {
        for_each_partition_of(b, 2, [&](const SetPartition& parts) {
            const std::size_t base = pending.size();
            pending.insert(pending.end(), parts.begin(), parts.end());
            expand(pending, chosen, n, visit);
            pending.resize(base);
        });
    }
    chosen.pop_back();
}

void expand(std::vector<Block>& pending, std::vector<Block>& chosen, std::size_t n,
            const std::function<void(const Nest&)>& visit) {
    if (pending.empty()) {
        visit(Nest::assume_valid(n, chosen));
        return;
    }
    const Block b = pending.back();
    pending.pop_back();
    expand_block(b, pending, chosen, n, visit);
    pending.push_back(b);
}

}  // namespace

void for_each_nest(std::size_t n, const std::function<void(const Nest&)>& visit, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("for_each_nest: n must be >= 1");
    if (n > cap) throw CapExceeded("nest enumeration", n, cap);
    for_each_partition(n, [&](const SetPartition& roots) {
        std::vector<Block> pending(roots.rbegin(), roots.rend());
        std::vector<Block> chosen;
        expand(pending, chosen, n, visit);
    }, std::max(cap, n));
}

std::vector<Nest> enumerate_nests(std::size_t n, std::size_t cap) {
    std::vector<Nest> out;
    for_each_nest(n, [&](const Nest& s) { out.push_back(s); }, cap);
    return out;
}

IntPoly nest_weight_poly(const Nest& s, unsigned d) {
    IntPoly p(1);
    for (const auto& [block, c] : nest_stats(s).children) p *= sigma(c - 1, d);
    return p;
}

void for_each_weight_vector(const Nest& s, unsigned d, const std::function<void(const WeightVector&)>& visit) {
    const NestStats st = nest_stats(s);
    WeightVector mu;
    std::vector<unsigned> hi;
    for (Block b : st.internal) {
        const long top = static_cast<long>(d) * (st.children.at(b) - 1) - 1;
        if (top < 1) return;
        mu.emplace_back(b, 1U);
        hi.push_back(static_cast<unsigned>(top));
    }
    while (true) {
        visit(mu);
        std::size_t i = 0;
        while (i < mu.size() && mu[i].second == hi[i]) {
            mu[i].second = 1;
            ++i;
        }
        if (i == mu.size()) return;
        ++mu[i].second;
    }
}

std::vector<WeightVector> enumerate_weight_vectors(const Nest& s, unsigned d) {
    std::vector<WeightVector> out;
    for_each_weight_vector(s, d, [&](const WeightVector& mu) { out.push_back(mu); });
    return out;
}

}  // namespace wonderful
