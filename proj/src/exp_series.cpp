#include "wonderful/exp_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wonderful {

IntPoly sigma(unsigned j, unsigned d) {
    if (j == 0) return {};
    return IntPoly::range_sum(1, static_cast<long>(d) * j - 1);
}

ExpSeries::ExpSeries(std::size_t order, std::vector<IntPoly> coeffs) : f_(order + 1) {
    for (std::size_t n = 0; n < coeffs.size() && n <= order; ++n) f_[n] = std::move(coeffs[n]);
}

ExpSeries ExpSeries::constant(std::size_t order, const IntPoly& c) {
    ExpSeries s(order);
    s.f_[0] = c;
    return s;
}

ExpSeries ExpSeries::t(std::size_t order) {
    ExpSeries s(order);
    if (order >= 1) s.f_[1] = 1;
    return s;
}

bool ExpSeries::is_zero() const {
    return std::all_of(f_.begin(), f_.end(), [](const IntPoly& p) { return p.is_zero(); });
}

ExpSeries ExpSeries::truncated(std::size_t order) const {
    if (order > this->order())
        throw std::invalid_argument("cannot raise truncation order " + std::to_string(this->order()) +
                                    " to " + std::to_string(order));
    return ExpSeries(order, std::vector<IntPoly>(f_.begin(), f_.begin() + static_cast<long>(order) + 1));
}

ExpSeries egf_add(const ExpSeries& a, const ExpSeries& b) {
    ExpSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] + b[n];
    return r;
}

ExpSeries egf_sub(const ExpSeries& a, const ExpSeries& b) {
    ExpSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] - b[n];
    return r;
}

ExpSeries egf_scale(const ExpSeries& a, const IntPoly& c) {
    ExpSeries r(a.order());
    for (std::size_t n = 0; n <= r.order(); ++n) r[n] = a[n] * c;
    return r;
}

ExpSeries egf_mul(const ExpSeries& a, const ExpSeries& b) {
    ExpSeries r(std::min(a.order(), b.order()));
    for (std::size_t n = 0; n <= r.order(); ++n) {
        IntPoly acc;
        for (std::size_t i = 0; i <= n; ++i) {
            if (a[i].is_zero() || b[n - i].is_zero()) continue;
            acc += (a[i] * b[n - i]) * IntPoly(binomial(n, i));
        }
        r[n] = std::move(acc);
    }
    return r;
}

namespace {

void require_zero_constant(const ExpSeries& a, const char* op) {
    if (!a[0].is_zero())
        throw std::invalid_argument(std::string(op) + ": series has nonzero constant term " + a[0].str());
}

ExpSeries divide_coeffs(const ExpSeries& a, const BigInt& k) {
    ExpSeries r(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) r[n] = a[n].divexact(k);
    return r;
}

}  // namespace

ExpSeries egf_power_over_factorial(const ExpSeries& a, unsigned k) {
    ExpSeries p = ExpSeries::constant(a.order(), 1);
    if (k == 0) return p;
    require_zero_constant(a, "egf_power_over_factorial");
    for (unsigned j = 1; j <= k; ++j) p = divide_coeffs(egf_mul(p, a), j);
    return p;
}

ExpSeries egf_exp(const ExpSeries& a) {
    require_zero_constant(a, "egf_exp");
    ExpSeries sum = ExpSeries::constant(a.order(), 1);
    ExpSeries p = sum;
    // a has zero constant term, so a^k/k! vanishes below t^k
    for (std::size_t k = 1; k <= a.order(); ++k) {
        p = divide_coeffs(egf_mul(p, a), k);
        sum = egf_add(sum, p);
    }
    return sum;
}

ExpSeries egf_exp_recurrence(const ExpSeries& a) {
    require_zero_constant(a, "egf_exp_recurrence");
    ExpSeries e(a.order());
    e[0] = 1;
    for (std::size_t n = 1; n <= a.order(); ++n) {
        IntPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (a[k].is_zero() || e[n - k].is_zero()) continue;
            acc += (a[k] * e[n - k]) * IntPoly(binomial(n - 1, k - 1));
        }
        e[n] = std::move(acc);
    }
    return e;
}

ExpSeries egf_compose(const std::vector<IntPoly>& outer, const ExpSeries& inner) {
    require_zero_constant(inner, "egf_compose");
    ExpSeries sum(inner.order());
    if (outer.empty()) return sum;
    ExpSeries p = ExpSeries::constant(inner.order(), 1);
    const std::size_t top = std::min(inner.order(), outer.size() - 1);
    for (std::size_t k = 0; k <= top; ++k) {
        if (k > 0) p = divide_coeffs(egf_mul(p, inner), k);
        if (!outer[k].is_zero()) sum = egf_add(sum, egf_scale(p, outer[k]));
    }
    return sum;
}

BigInt extract(const ExpSeries& series, long i, std::size_t n) {
    if (n > series.order())
        throw std::out_of_range("t-degree " + std::to_string(n) + " beyond truncation order " +
                                std::to_string(series.order()));
    if (i < 0) return 0;
    return series[n].coeff(i);
}

}  // namespace wonderful
