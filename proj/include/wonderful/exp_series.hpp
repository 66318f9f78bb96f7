#pragma once

#include "wonderful/int_poly.hpp"

#include <cstddef>
#include <vector>

namespace wonderful {

/// sigma_j = x + x^2 + ... + x^(dj-1); sigma_0 = 0.
IntPoly sigma(unsigned j, unsigned d);

/// Truncated exponential generating function sum_{n <= order} f_n(x) t^n / n!.
///
/// Only the integer polynomials f_n are stored; the 1/n! is notational. The
/// truncation order is part of the value and never changes implicitly.
class ExpSeries {
public:
    explicit ExpSeries(std::size_t order) : f_(order + 1) {}
    ExpSeries(std::size_t order, std::vector<IntPoly> coeffs);

    static ExpSeries constant(std::size_t order, const IntPoly& c);
    /// The series t (f_1 = 1).
    static ExpSeries t(std::size_t order);

    std::size_t order() const { return f_.size() - 1; }
    const IntPoly& operator[](std::size_t n) const { return f_.at(n); }
    IntPoly& operator[](std::size_t n) { return f_.at(n); }
    const std::vector<IntPoly>& coeffs() const { return f_; }

    bool is_zero() const;
    ExpSeries truncated(std::size_t order) const;

    friend bool operator==(const ExpSeries& a, const ExpSeries& b) { return a.f_ == b.f_; }
    friend bool operator!=(const ExpSeries& a, const ExpSeries& b) { return !(a == b); }

private:
    std::vector<IntPoly> f_;
};

ExpSeries egf_add(const ExpSeries& a, const ExpSeries& b);
ExpSeries egf_sub(const ExpSeries& a, const ExpSeries& b);
ExpSeries egf_scale(const ExpSeries& a, const IntPoly& c);

/// Binomial convolution: result_n = sum_i C(n,i) a_i b_{n-i}, at order min(a, b).
ExpSeries egf_mul(const ExpSeries& a, const ExpSeries& b);

/// a^k / k!, built by repeated multiplication with an exact division by j at
/// step j. Requires a zero constant term when k > 0.
ExpSeries egf_power_over_factorial(const ExpSeries& a, unsigned k);

/// exp(a) = sum_k a^k / k!. Throws std::invalid_argument if a_0 != 0.
ExpSeries egf_exp(const ExpSeries& a);

/// exp(a) through the derivative recurrence e_n = sum_k C(n-1,k-1) a_k e_{n-k}.
/// Division free; used as a second route to egf_exp.
ExpSeries egf_exp_recurrence(const ExpSeries& a);

/// E_g(inner) = sum_k g_k inner^k / k! with g_k = outer[k] (missing k are zero).
ExpSeries egf_compose(const std::vector<IntPoly>& outer, const ExpSeries& inner);

/// [x^i t^n / n!] of the series. Zero for i < 0; throws std::out_of_range if
/// n exceeds the truncation order.
BigInt extract(const ExpSeries& series, long i, std::size_t n);

}  // namespace wonderful
