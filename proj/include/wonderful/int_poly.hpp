#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace wonderful {

using BigInt = mpz_class;

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);

/// Univariate polynomial with arbitrary-precision integer coefficients.
///
/// coeffs()[e] is the coefficient of var^e. The stored sequence never ends in a
/// zero, so the zero polynomial has no coefficients and equality is plain
/// sequence equality.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);  // NOLINT: constants convert implicitly
    IntPoly(const BigInt& c);  // NOLINT
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(const BigInt& c, std::size_t exponent);
    static IntPoly x() { return monomial(1, 1); }
    /// x^lo + x^(lo+1) + ... + x^hi; zero when hi < lo.
    static IntPoly range_sum(long lo, long hi);

    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Lowest exponent with a nonzero coefficient; -1 for zero.
    long valuation() const;
    /// Coefficient of var^e; zero outside the stored range (including e < 0).
    BigInt coeff(long e) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly operator-() const;

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly shifted(std::size_t k) const;  // multiply by var^k
    IntPoly pow(unsigned k) const;

    /// Divides every coefficient by k; throws InexactDivision on any remainder.
    IntPoly divexact(const BigInt& k) const;
    /// Polynomial division by a divisor with unit leading coefficient; throws
    /// InexactDivision when the remainder is nonzero.
    IntPoly divexact(const IntPoly& divisor) const;

    BigInt eval(const BigInt& at) const;
    BigInt sum_of_coeffs() const { return eval(1); }
    /// True when coefficients are symmetric on [lo, hi] and vanish outside it.
    bool palindromic_on(long lo, long hi) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace wonderful
