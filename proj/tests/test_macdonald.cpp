#include <doctest.h>

#include "wonderful/macdonald.hpp"

#include <functional>

using namespace wonderful;

namespace {

// Graded-symmetric power of a cohomology basis: even classes may repeat, odd
// classes appear at most once. Poincare polynomial of the n-th power by
// walking all such monomials.
IntPoly basis_oracle(const std::vector<long>& betti, std::size_t n) {
    std::vector<std::size_t> degree;
    for (std::size_t j = 0; j < betti.size(); ++j)
        for (long c = 0; c < betti[j]; ++c) degree.push_back(j);
    IntPoly total;
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left, std::size_t deg) {
        if (left == 0) {
            total += IntPoly::monomial(1, deg);
            return;
        }
        for (std::size_t b = start; b < degree.size(); ++b) {
            const bool odd = degree[b] % 2 == 1;
            if (odd) {
                rec(b + 1, left - 1, deg + degree[b]);
            } else {
                for (std::size_t m = 1; m <= left; ++m) rec(b + 1, left - m, deg + m * degree[b]);
            }
        }
    };
    rec(0, n, 0);
    return total;
}

}  // namespace

TEST_CASE("point and projective line") {
    for (std::size_t n = 0; n <= 8; ++n) {
        CHECK(symmetric_product_poincare(BettiVector({1}), n) == IntPoly(1));
        IntPoly expected;
        for (std::size_t i = 0; i <= n; ++i) expected += IntPoly::monomial(1, 2 * i);
        CHECK(symmetric_product_poincare(BettiVector::projective_space(1), n) == expected);
    }
}

TEST_CASE("agrees with the basis oracle") {
    const std::vector<std::vector<long>> spaces{{1, 0, 1, 0, 1}, {1, 2, 1}, {1, 4, 1}, {1, 6, 1}, {1, 2, 3, 2, 1}, {1, 0, 2, 0, 1}};
    for (const auto& b : spaces)
        for (std::size_t n = 0; n <= 6; ++n) CHECK(symmetric_product_poincare(BettiVector(b), n) == basis_oracle(b, n));
}

TEST_CASE("genus g curve, second symmetric power") {
    for (long g = 0; g <= 3; ++g) {
        // (1 + tT)^{2g} / ((1 - T)(1 - t^2 T)) at T^2, expanded by hand
        IntPoly expected;
        // coefficient of T^j in 1/((1-T)(1-t^2T)) is 1 + t^2 + ... + t^{2j}
        auto geo = [](std::size_t j) {
            IntPoly p;
            for (std::size_t i = 0; i <= j; ++i) p += IntPoly::monomial(1, 2 * i);
            return p;
        };
        for (std::size_t k = 0; k <= 2; ++k)
            expected += IntPoly::monomial(binomial(static_cast<unsigned long>(2 * g), k), k) * geo(2 - k);
        CHECK(symmetric_product_poincare(BettiVector({1, 2 * g, 1}), 2) == expected);
    }
}

TEST_CASE("first symmetric power is X and coefficients are non-negative") {
    for (long g = 0; g <= 3; ++g) {
        const BettiVector c({1, 2 * g, 1});
        CHECK(symmetric_product_poincare(c, 1) == c.poincare());
        for (std::size_t n = 0; n <= 6; ++n)
            for (const auto& coef : symmetric_product_poincare(c, n).coeffs()) CHECK(coef >= 0);
    }
}

TEST_CASE("series starts with 1") {
    const auto s = macdonald_series(BettiVector({1, 2, 1}), 4);
    CHECK(s.coeffs.size() == 5);
    CHECK(s.coeffs[0] == IntPoly(1));
}
