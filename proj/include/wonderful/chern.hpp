#pragma once

#include "wonderful/int_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace wonderful {

/// Multivariate integer polynomial in x and formal Chern roots a_1..a_r.
/// Variable 0 is x; variable j (1 <= j <= r) is a_j.
class FormalChernPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit FormalChernPoly(std::size_t roots) : nvars_(roots + 1) {}

    static FormalChernPoly constant(std::size_t roots, const BigInt& c);
    static FormalChernPoly var(std::size_t roots, std::size_t index);
    static FormalChernPoly x(std::size_t roots) { return var(roots, 0); }
    static FormalChernPoly root(std::size_t roots, std::size_t j) { return var(roots, j); }

    std::size_t roots() const { return nvars_ - 1; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    FormalChernPoly& operator+=(const FormalChernPoly& o);
    FormalChernPoly& operator-=(const FormalChernPoly& o);
    friend FormalChernPoly operator+(FormalChernPoly a, const FormalChernPoly& b) { return a += b; }
    friend FormalChernPoly operator-(FormalChernPoly a, const FormalChernPoly& b) { return a -= b; }
    friend FormalChernPoly operator*(const FormalChernPoly& a, const FormalChernPoly& b);
    friend bool operator==(const FormalChernPoly& a, const FormalChernPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    FormalChernPoly pow(unsigned k) const;
    /// Part of total degree k in the roots (x does not count).
    FormalChernPoly root_degree_part(unsigned k) const;
    /// Substitutes an univariate polynomial in x for x.
    static FormalChernPoly from_x_poly(std::size_t roots, const IntPoly& p);

    std::string str() const;

private:
    void add_term(const Exponents& e, const BigInt& c);
    std::size_t nvars_;
    std::map<Exponents, BigInt> terms_;
};

/// e_k(a_{first}, ..., a_{last}) by direct enumeration of k-subsets of the
/// listed root indices (indices may repeat to model repeated roots).
FormalChernPoly elementary_symmetric(std::size_t roots, const std::vector<std::size_t>& root_indices,
                                     unsigned k);

struct ChernWitness {
    bool root_identity = false;   // prod_j (1 + a_j + x) = sum_i e_i(a) (1+x)^{r-i}
    bool zeta_identity = true;    // twisted normal-bundle identity for every tested c
    std::vector<unsigned> tested_c;
    bool holds() const { return root_identity && zeta_identity; }
};

/// Checks the Chern-root expansion of a rank-r bundle twisted by a line bundle
/// with c_1 = x, and the specialization to a normal bundle whose total Chern
/// class is c(T)^(c-1) for a rank-d tangent bundle T, for c in {2, 3}:
///   prod over roots of N of (1 + root + x)
///     = sum_i c_i(N) (1+x)^{d(c-1)-i}
///     = zeta(x)^(c-1),  zeta(x) = sum_i (1+x)^{d-i} c_i(T).
/// Throws Error if any identity fails.
ChernWitness twisted_chern_identity(unsigned r, unsigned d);

}  // namespace wonderful
