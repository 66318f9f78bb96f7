#include "wonderful/int_poly.hpp"

#include "wonderful/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace wonderful {

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

IntPoly::IntPoly(long c) {
    if (c != 0) c_.emplace_back(c);
}

IntPoly::IntPoly(const BigInt& c) {
    if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(exponent + 1, BigInt(0));
    p.c_[exponent] = c;
    return p;
}

IntPoly IntPoly::range_sum(long lo, long hi) {
    IntPoly p;
    if (hi < lo || hi < 0) return p;
    lo = std::max(lo, 0L);
    p.c_.assign(static_cast<std::size_t>(hi) + 1, BigInt(0));
    for (long e = lo; e <= hi; ++e) p.c_[static_cast<std::size_t>(e)] = 1;
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long IntPoly::valuation() const {
    for (std::size_t e = 0; e < c_.size(); ++e)
        if (c_[e] != 0) return static_cast<long>(e);
    return -1;
}

BigInt IntPoly::coeff(long e) const {
    if (e < 0 || e >= static_cast<long>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(e)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t e = 0; e < o.c_.size(); ++e) c_[e] += o.c_[e];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t e = 0; e < o.c_.size(); ++e) c_[e] -= o.c_[e];
    trim();
    return *this;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly IntPoly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> out(k, BigInt(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned k) const {
    IntPoly result(1);
    IntPoly base = *this;
    while (k) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k) base *= base;
    }
    return result;
}

IntPoly IntPoly::divexact(const BigInt& k) const {
    if (k == 0) throw InexactDivision("division of polynomial by zero");
    IntPoly r = *this;
    for (auto& v : r.c_) {
        if (!mpz_divisible_p(v.get_mpz_t(), k.get_mpz_t()))
            throw InexactDivision("coefficient " + v.get_str() + " not divisible by " + k.get_str());
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
    }
    return r;
}

IntPoly IntPoly::divexact(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw InexactDivision("division by the zero polynomial");
    const BigInt& lead = divisor.c_.back();
    if (lead != 1 && lead != -1)
        throw InexactDivision("divisor " + divisor.str() + " does not have unit leading coefficient");
    if (is_zero()) return {};
    std::vector<BigInt> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    if (rem.size() - 1 < dd) throw InexactDivision(str() + " is not divisible by " + divisor.str());
    std::vector<BigInt> q(rem.size() - dd, BigInt(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt f = rem[i + dd] * lead;  // lead is its own inverse
        q[i] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= f * divisor.c_[j];
    }
    for (const auto& v : rem)
        if (v != 0) throw InexactDivision(str() + " is not divisible by " + divisor.str());
    return IntPoly(std::move(q));
}

BigInt IntPoly::eval(const BigInt& at) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

bool IntPoly::palindromic_on(long lo, long hi) const {
    if (is_zero()) return true;
    if (valuation() < lo || degree() > hi) return false;
    for (long e = lo; e <= hi; ++e)
        if (coeff(e) != coeff(lo + hi - e)) return false;
    return true;
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < c_.size(); ++e) {
        const BigInt& v = c_[e];
        if (v == 0) continue;
        BigInt mag = abs(v);
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << var;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

}  // namespace wonderful
