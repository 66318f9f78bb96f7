#include <doctest.h>

#include "wonderful/errors.hpp"
#include "wonderful/forest.hpp"
#include "wonderful/nest.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace wonderful;

namespace {

using Labeled = std::pair<std::vector<Block>, std::vector<std::pair<Block, unsigned>>>;

Labeled relabel(const Nest& s, const WeightVector& mu, const std::vector<unsigned>& perm) {
    auto image = [&](Block b) {
        Block out = 0;
        for (std::size_t i = 0; i < s.n(); ++i)
            if (b >> i & 1u) out |= Block{1} << (perm[i] - 1);
        return out;
    };
    Labeled l;
    for (Block b : s.blocks()) l.first.push_back(image(b));
    for (const auto& [b, w] : mu) l.second.emplace_back(image(b), w);
    std::sort(l.first.begin(), l.first.end());
    std::sort(l.second.begin(), l.second.end());
    return l;
}

}  // namespace

TEST_CASE("tree construction and encodings") {
    const auto L = WeightedTree::leaf();
    const auto cherry = WeightedTree::node(2, {L, L});
    CHECK(cherry.encoding() == "2(L,L)");
    CHECK(cherry.leaves() == 2);
    CHECK(cherry.automorphisms() == 2);
    const auto cat = WeightedTree::node(1, {L, cherry});
    CHECK(cat.encoding() == WeightedTree::node(1, {cherry, L}).encoding());
    CHECK(cat.total_weight() == 3);
    CHECK_THROWS_AS(WeightedTree::node(1, {L}), std::invalid_argument);
    CHECK_THROWS_AS(WeightedTree::node(0, {L, L}), std::invalid_argument);
}

TEST_CASE("forest type lists identical-tree multiplicities") {
    const auto L = WeightedTree::leaf();
    const auto a = WeightedTree::node(1, {L, L});
    const auto b = WeightedTree::node(2, {L, L});
    CHECK(WeightedForest({a, a}).type() == ForestType{2});
    CHECK(WeightedForest({a, b}).type() == ForestType{1, 1});
    CHECK(WeightedForest({a, a, L}).type() == ForestType{2, 1});
    CHECK(WeightedForest({a, a}).automorphisms() == 8);
}

TEST_CASE("labelings_count equals the size of the labeled orbit") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 1u);
        std::vector<std::vector<unsigned>> perms;
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));
        for (const auto& s : enumerate_nests(n))
            for (const auto& mu : enumerate_weight_vectors(s, 3)) {
                std::set<Labeled> orbit;
                for (const auto& p : perms) orbit.insert(relabel(s, mu, p));
                CHECK(labelings_count(forest_of_nest(s, mu), n) == orbit.size());
            }
    }
}

TEST_CASE("small forest lists") {
    CHECK(enumerate_weighted_forests(2, 1).size() == 1);
    const auto f23 = enumerate_weighted_forests(2, 3);
    CHECK(f23.size() == 3);
    // n = 3, d = 2: bare, cherry+leaf (a = 1), 3-star (b = 1,2,3), caterpillar (1,1)
    std::set<std::string> codes;
    for (const auto& f : enumerate_weighted_forests(3, 2)) codes.insert(f.encoding());
    CHECK(codes == std::set<std::string>{"L + L + L", "1(L,L) + L", "1(L,L,L)", "2(L,L,L)", "3(L,L,L)", "1(1(L,L),L)"});
}

TEST_CASE("forests are distinct and respect the weight ranges") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 3; ++d) {
            std::set<std::string> seen;
            for (const auto& f : enumerate_weighted_forests(n, d)) {
                CHECK(f.leaves() == n);
                CHECK(seen.insert(f.encoding()).second);
            }
        }
}

TEST_CASE("every labeled pair maps to an enumerated forest") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 3; ++d) {
            std::set<std::string> listed, hit;
            for (const auto& f : enumerate_weighted_forests(n, d)) listed.insert(f.encoding());
            for_each_nest(n, [&](const Nest& s) {
                for_each_weight_vector(s, d, [&](const WeightVector& mu) { hit.insert(forest_of_nest(s, mu).encoding()); });
            });
            CHECK(hit == listed);
        }
}

TEST_CASE("forest cap and leaf mismatch") {
    CHECK_THROWS_AS(enumerate_weighted_forests(10, 2), CapExceeded);
    CHECK_THROWS_AS(labelings_count(enumerate_weighted_forests(3, 2).front(), 4), std::invalid_argument);
}
