#include <doctest.h>

#include "wonderful/errors.hpp"
#include "wonderful/int_poly.hpp"

#include <random>

using namespace wonderful;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(-1, max_deg), coef(-9, 9);
    std::vector<BigInt> c;
    for (int i = 0, dg = deg(rng); i <= dg; ++i) c.emplace_back(coef(rng));
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros") {
    CHECK(IntPoly({1, 2, 0, 0}) == IntPoly({1, 2}));
    CHECK(IntPoly({0, 0}).is_zero());
    CHECK(IntPoly().degree() == -1);
    CHECK(IntPoly({0, 0, 3}).valuation() == 2);
    CHECK(IntPoly({4, 5}).coeff(7) == 0);
    CHECK(IntPoly({4, 5}).coeff(-1) == 0);
}

TEST_CASE("ring axioms hold under evaluation") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 4);
        for (long at : {-3L, -1L, 0L, 2L, 5L}) {
            CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
            CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
            CHECK((a - b).eval(at) == a.eval(at) - b.eval(at));
        }
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(11);
    const IntPoly divisor = IntPoly::monomial(1, 3) - IntPoly::monomial(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly q = random_poly(rng, 8);
        CHECK((q * divisor).divexact(divisor) == q);
        CHECK((q * IntPoly(6)).divexact(BigInt(6)) == q);
    }
    CHECK_THROWS_AS(IntPoly({1, 1, 1}).divexact(IntPoly({1, 1})), InexactDivision);
    CHECK_THROWS_AS(IntPoly({3, 4}).divexact(BigInt(2)), InexactDivision);
}

TEST_CASE("binomials satisfy Pascal's rule") {
    for (unsigned long n = 1; n < 30; ++n)
        for (unsigned long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(5, 7) == 0);
    CHECK(factorial(10) == 3628800);
}

TEST_CASE("range sums and powers") {
    CHECK(IntPoly::range_sum(1, 3) == IntPoly({0, 1, 1, 1}));
    CHECK(IntPoly::range_sum(1, 0).is_zero());
    CHECK(IntPoly({1, 1}).pow(4) == IntPoly({1, 4, 6, 4, 1}));
    CHECK(IntPoly({1, 2, 1}).palindromic_on(0, 2));
    CHECK_FALSE(IntPoly({1, 2, 2}).palindromic_on(0, 2));
    CHECK(IntPoly({0, 1, 0, -2}).str() == "x - 2*x^3");
}
