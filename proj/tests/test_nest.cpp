#include <doctest.h>

#include "wonderful/errors.hpp"
#include "wonderful/exp_series.hpp"
#include "wonderful/nest.hpp"

#include <set>

using namespace wonderful;

namespace {

// All nests of [n] by filtering every family of subsets of size >= 2.
std::set<std::vector<Block>> brute_force_nests(std::size_t n) {
    std::vector<Block> big;
    for (Block b = 1; b < (Block{1} << n); ++b)
        if (popcount(b) >= 2) big.push_back(b);
    std::set<std::vector<Block>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << big.size()); ++mask) {
        std::vector<Block> fam;
        for (std::size_t i = 0; i < big.size(); ++i)
            if (mask >> i & 1u) fam.push_back(big[i]);
        bool ok = true;
        for (std::size_t i = 0; i < fam.size() && ok; ++i)
            for (std::size_t j = i + 1; j < fam.size() && ok; ++j) {
                const Block m = fam[i] & fam[j];
                if (m && m != fam[i] && m != fam[j]) ok = false;
            }
        if (ok) {
            std::sort(fam.begin(), fam.end());
            out.insert(fam);
        }
    }
    return out;
}

// Counts of nests from the EGF identity: connected nests P satisfy
// 2P = t + exp(P) - 1, all nests are exp(P).
std::vector<long long> nest_counts(std::size_t upto) {
    std::vector<long long> p(upto + 1, 0), e(upto + 1, 0);
    std::vector<std::vector<long long>> binom(upto + 1, std::vector<long long>(upto + 1, 0));
    for (std::size_t i = 0; i <= upto; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j < i ? binom[i - 1][j] : 0);
    }
    e[0] = 1;
    for (std::size_t n = 1; n <= upto; ++n) {
        // e_n = sum_k C(n-1,k-1) p_k e_{n-k}; the k = n term is p_n
        long long rest = 0;
        for (std::size_t k = 1; k < n; ++k) rest += binom[n - 1][k - 1] * p[k] * e[n - k];
        p[n] = n == 1 ? 1 : rest;  // 2p_n = e_n = rest + p_n
        e[n] = rest + p[n];
    }
    return e;
}

}  // namespace

TEST_CASE("enumeration agrees with brute force for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        std::set<std::vector<Block>> ours;
        for (const auto& s : enumerate_nests(n)) {
            auto in = s.internal();
            std::sort(in.begin(), in.end());
            CHECK(ours.insert(in).second);
        }
        CHECK(ours == brute_force_nests(n));
    }
    CHECK(enumerate_nests(4).size() == 52);
}

TEST_CASE("nest counts follow the generating function") {
    const auto expected = nest_counts(8);
    for (std::size_t n = 1; n <= 8; ++n) {
        std::size_t count = 0, connected = 0;
        for_each_nest(n, [&](const Nest& s) {
            ++count;
            if (nest_stats(s).components == 1) ++connected;
        });
        CHECK(count == static_cast<std::size_t>(expected[n]));
        if (n == 5) CHECK(connected == 236);
    }
}

TEST_CASE("validation") {
    CHECK_NOTHROW(Nest(3, {1, 2, 4, 3}));
    CHECK_THROWS_AS(Nest(3, {1, 2, 3}), std::invalid_argument);           // missing {3}
    CHECK_THROWS_AS(Nest(3, {1, 2, 4, 3, 6}), std::invalid_argument);     // 12 and 23 overlap
    CHECK_THROWS_AS(Nest(3, {1, 2, 4, 3, 3}), std::invalid_argument);     // repeated
    CHECK_THROWS_AS(Nest(3, {1, 2, 4, 8}), std::invalid_argument);        // element 4
    CHECK(Nest(3, {3, 1, 4, 2, 7}) == Nest(3, {1, 2, 4, 3, 7}));
    CHECK(Nest(3, {1, 2, 4, 3, 7}).str() == "1 2 3 12 123");
}

TEST_CASE("stats and weights") {
    const Nest s(4, {1, 2, 4, 8, 3, 15});
    const auto st = nest_stats(s);
    CHECK(st.components == 1);
    CHECK(st.children.at(3) == 2);
    CHECK(st.children.at(15) == 3);
    // sigma_1 sigma_2 at d = 2: x (x + x^2 + x^3)
    CHECK(nest_weight_poly(s, 2) == IntPoly({0, 0, 1, 1, 1}));
    CHECK(nest_weight_poly(Nest::trivial(4), 3) == IntPoly(1));
}

TEST_CASE("weight vectors enumerate the box M_S") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 3; ++d)
            for_each_nest(n, [&](const Nest& s) {
                const auto st = nest_stats(s);
                std::size_t expected = 1;
                for (const auto& [b, c] : st.children) {
                    const long hi = static_cast<long>(d * (c - 1)) - 1;
                    expected *= hi >= 1 ? static_cast<std::size_t>(hi) : 0;
                }
                const auto vs = enumerate_weight_vectors(s, d);
                CHECK(vs.size() == expected);
                IntPoly by_norm;
                for (const auto& mu : vs) by_norm += IntPoly::monomial(1, weight_norm(mu));
                CHECK(by_norm == nest_weight_poly(s, d));
            });
}

TEST_CASE("relabeling is a bijection on nests") {
    const std::vector<unsigned> perm{3, 1, 4, 2};
    std::set<Nest> image;
    for (const auto& s : enumerate_nests(4)) image.insert(s.relabeled(perm));
    CHECK(image.size() == 52);
}

TEST_CASE("nest cap") {
    CHECK_THROWS_AS(for_each_nest(10, [](const Nest&) {}), CapExceeded);
}
