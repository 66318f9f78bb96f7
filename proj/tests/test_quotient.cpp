#include <doctest.h>

#include "wonderful/errors.hpp"
#include "wonderful/macdonald.hpp"
#include "wonderful/symmetric_quotient.hpp"

using namespace wonderful;

TEST_CASE("n = 1 is h(X)") {
    const auto q = quotient_decomposition(1, 2);
    CHECK(q.entries.size() == 1);
    CHECK(q.at({1}, 0) == 1);
}

TEST_CASE("n = 2: h(X^(2)) plus h(X)(a) for 1 <= a <= d-1") {
    for (unsigned d = 1; d <= 5; ++d) {
        const auto q = quotient_decomposition(2, d);
        CHECK(q.at({2}, 0) == 1);
        for (unsigned a = 1; a < d; ++a) CHECK(q.at({1}, a) == 1);
        CHECK(q.entries.size() == d);
    }
}

TEST_CASE("n = 3: X-summands have multiplicity min(m, 2d - m)") {
    for (unsigned d = 2; d <= 3; ++d) {
        const auto q = quotient_decomposition(3, d);
        CHECK(q.at({3}, 0) == 1);
        for (unsigned a = 1; a < d; ++a) CHECK(q.at({1, 1}, a) == 1);
        for (unsigned m = 1; m < 2 * d; ++m) CHECK(q.at({1}, m) == std::min(m, 2 * d - m));
        CHECK(q.entries.size() == 1 + (d - 1) + (2 * d - 1));
    }
}

TEST_CASE("n = 4 double cherry: type {1,1} for a < b, {2} for a = b") {
    const unsigned d = 4;
    const auto q = quotient_decomposition(4, d);
    auto has = [&](const std::string& code, const ForestType& nu, unsigned m) {
        const auto it = q.forests.find({nu, m});
        return it != q.forests.end() && std::find(it->second.begin(), it->second.end(), code) != it->second.end();
    };
    for (unsigned a = 1; a < d; ++a)
        for (unsigned b = a; b < d; ++b) {
            const std::string code = std::to_string(a) + "(L,L) + " + std::to_string(b) + "(L,L)";
            if (a == b) CHECK(has(code, {2}, a + b));
            else CHECK(has(code, {1, 1}, a + b));
        }
    for (unsigned a = 1; a < d; ++a) CHECK(lambda(4, d, {2}, 2 * a) >= 1);
}

TEST_CASE("mass conservation") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 3; ++d) {
            const auto mb = mass_balance(n, d);
            CHECK(mb.forest_side == mb.nest_side);
        }
}

TEST_CASE("forest table matches the orbit oracle") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 3; ++d) CHECK(quotient_from_forests(n, d).same_counts(quotient_from_orbits(n, d)));
}

TEST_CASE("lambda is the count of matching forests") {
    const auto q = quotient_from_forests(5, 2);
    for (const auto& [key, lam] : q.entries) CHECK(lambda(5, 2, key.first, key.second) == lam);
    CHECK(lambda(5, 2, {7}, 0) == 0);
}

TEST_CASE("quotient Poincare polynomials") {
    // P^1, n = 2: the symmetric square of P^1 is P^2
    CHECK(quotient_poincare(2, 1, BettiVector::projective_space(1)) == IntPoly({1, 0, 1, 0, 1}));
    const BettiVector p2 = BettiVector::projective_space(2);
    CHECK(quotient_poincare(2, 2, p2) == symmetric_product_poincare(p2, 2) + IntPoly::monomial(1, 2) * p2.poincare());
    CHECK_THROWS_AS(quotient_poincare(2, 2, BettiVector::projective_space(1)), std::invalid_argument);
}

TEST_CASE("quotient Poincare is bounded by the full Poincare polynomial") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 2; ++d) {
            const BettiVector b = BettiVector::projective_space(d);
            const IntPoly q = quotient_poincare(n, d, b), full = poincare(n, d, b);
            for (long j = 0; j <= std::max(q.degree(), full.degree()); ++j) {
                CHECK(q.coeff(j) >= 0);
                CHECK(q.coeff(j) <= full.coeff(j));
            }
        }
}
