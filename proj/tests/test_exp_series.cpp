#include <doctest.h>

#include "wonderful/exp_series.hpp"

using namespace wonderful;

TEST_CASE("sigma_j is x + ... + x^{dj-1}") {
    CHECK(sigma(0, 3).is_zero());
    CHECK(sigma(1, 1).is_zero());
    CHECK(sigma(1, 2) == IntPoly::x());
    CHECK(sigma(2, 2) == IntPoly({0, 1, 1, 1}));
}

TEST_CASE("exp(t) has all coefficients one") {
    const ExpSeries e = egf_exp(ExpSeries::t(10));
    for (std::size_t n = 0; n <= 10; ++n) CHECK(e[n] == IntPoly(1));
}

TEST_CASE("exp(x t) has coefficients x^n") {
    const ExpSeries e = egf_exp(egf_scale(ExpSeries::t(8), IntPoly::x()));
    for (std::size_t n = 0; n <= 8; ++n) CHECK(e[n] == IntPoly::monomial(1, n));
}

TEST_CASE("exp(exp(t)-1) gives the Bell numbers") {
    ExpSeries a(10);
    for (std::size_t n = 1; n <= 10; ++n) a[n] = 1;
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
    const ExpSeries e = egf_exp(a), r = egf_exp_recurrence(a);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(e[n] == IntPoly(bell[n]));
        CHECK(r[n] == IntPoly(bell[n]));
    }
}

TEST_CASE("composition with the exponential outer series equals egf_exp") {
    ExpSeries a(7);
    for (std::size_t n = 1; n <= 7; ++n) a[n] = IntPoly({static_cast<long>(n), 1});
    std::vector<IntPoly> ones(8, IntPoly(1));
    CHECK(egf_compose(ones, a) == egf_exp(a));
    CHECK(egf_compose({}, a).is_zero());
}

TEST_CASE("products are binomial convolutions") {
    const ExpSeries t = ExpSeries::t(6);
    const ExpSeries t2 = egf_mul(t, t);
    CHECK(t2[2] == IntPoly(2));  // t^2 = 2 t^2/2!
    CHECK(egf_power_over_factorial(t, 3)[3] == IntPoly(1));
    CHECK_THROWS_AS(egf_exp(ExpSeries::constant(3, 1)), std::invalid_argument);
    CHECK(extract(t2, 0, 2) == 2);
    CHECK(extract(t2, -1, 2) == 0);
    CHECK_THROWS_AS(extract(t2, 0, 9), std::out_of_range);
}
