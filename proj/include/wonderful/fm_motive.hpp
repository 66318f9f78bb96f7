#pragma once

#include "wonderful/exp_series.hpp"
#include "wonderful/int_poly.hpp"
#include "wonderful/nest.hpp"
#include "wonderful/partitions.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wonderful {

/// Multiplicities of h(X^k)(i) in h(X[n]) for dim X = d.
struct DecompTable {
    std::size_t n = 0;
    unsigned d = 0;
    std::map<std::pair<std::size_t, long>, BigInt> entries;  // (k, i) -> multiplicity, zeros omitted

    BigInt at(std::size_t k, long i) const;
    friend bool operator==(const DecompTable& a, const DecompTable& b) {
        return a.n == b.n && a.d == b.d && a.entries == b.entries;
    }
};

/// rank A(X^k) for k = 1..n (ranks[k-1]).
struct RankProfile {
    std::vector<BigInt> ranks;

    static RankProfile projective(unsigned d, std::size_t n);  // (d+1)^k
    const BigInt& at(std::size_t k) const;
};

/// Betti numbers b_0..b_{2d} of X.
struct BettiVector {
    std::vector<long> b;

    /// Throws std::invalid_argument on negative entries, b_0 < 1, or a length
    /// that is not odd.
    explicit BettiVector(std::vector<long> values);
    static BettiVector projective_space(unsigned d);

    unsigned dim() const { return static_cast<unsigned>((b.size() - 1) / 2); }
    /// b_i = b_{2d-i}; violations are reported, not rejected.
    bool satisfies_duality() const;
    IntPoly poincare() const;  // sum b_j t^j
};

/// f_n via direct enumeration over connected nests (c = 1).
IntPoly f_direct(std::size_t n, unsigned d, std::size_t cap = kDefaultNestCap);

/// f_n via the partition recursion, memoized per instance.
class FRecursion {
public:
    explicit FRecursion(unsigned d, std::size_t partition_cap = kDefaultPartitionCap)
        : d_(d), cap_(partition_cap) {}

    const IntPoly& f(std::size_t n);
    unsigned d() const { return d_; }

private:
    unsigned d_;
    std::size_t cap_;
    std::map<std::size_t, IntPoly> memo_;
};

IntPoly f_recursive(std::size_t n, unsigned d);

/// Solves (1-x)x^d t + (1 - x^{d+1}) = exp(x^d N) - x^{d+1} exp(N) for N
/// term by term, dividing exactly by x^d(1-x) at every order. Verifies the
/// residual through egf_exp afterwards; throws CrossCheckFailure if it is not
/// the zero series.
ExpSeries solve_N(unsigned d, std::size_t order);

/// (1-x)x^d t + (1 - x^{d+1}) - exp(x^d N) + x^{d+1} exp(N), via egf_exp.
ExpSeries functional_equation_residual(const ExpSeries& N, unsigned d);

/// Polynomial in sigma_1, sigma_2, ...: exponent vector (index j-1 for
/// sigma_j, trailing zeros trimmed) -> coefficient.
using SigmaPoly = std::map<std::vector<unsigned>, BigInt>;

/// f_1..f_order as polynomials in the sigma_j, with d left symbolic. Entry 0
/// is unused. Built from integer partitions: a block structure of type lambda
/// with k >= 2 parts contributes n!/(prod lambda_i! prod m_j!) sigma_{k-1}
/// prod f_{lambda_i}.
std::vector<SigmaPoly> sigma_expansion(std::size_t order);

/// Substitutes sigma_j = x + ... + x^{dj-1}.
IntPoly evaluate_sigma(const SigmaPoly& p, unsigned d);

/// "s4 + 15*s1*s3 + 10*s2^2 + ..." (graded by total sigma index, then lexicographic).
std::string sigma_str(const SigmaPoly& p);

/// Generating-function session for one dimension d: N and its powers N^k/k!
/// are computed once and reused.
class FmSession {
public:
    FmSession(unsigned d, std::size_t order);

    unsigned d() const { return d_; }
    std::size_t order() const { return N_.order(); }
    const ExpSeries& N() const { return N_; }
    const ExpSeries& power_over_factorial(unsigned k);

    BigInt multiplicity(std::size_t n, std::size_t k, long i);
    /// [t^n/n!] N^k/k! as a polynomial in x.
    IntPoly component_poly(std::size_t n, std::size_t k);

private:
    unsigned d_;
    ExpSeries N_;
    std::map<unsigned, ExpSeries> powers_;
};

/// [x^i t^n/n!] N^k/k!.
BigInt multiplicity(std::size_t n, unsigned d, std::size_t k, long i);

/// Direct count: sum over nests with k components of [x^i] nest_weight_poly.
BigInt multiplicity_direct(std::size_t n, unsigned d, std::size_t k, long i,
                           std::size_t cap = kDefaultNestCap);

/// [x^i] prod_j f_{|I_j|}(x) for a partition of {1..n}.
BigInt partition_multiplicity(std::size_t n, unsigned d, const SetPartition& partition, long i);

/// Coefficients of exp(yN) at t^n: result[k] = [y^k][t^n/n!] exp(yN). Second
/// route to the N^k/k! table.
std::vector<IntPoly> bivariate_components(const ExpSeries& N, std::size_t n);

/// Generating-function table and nest-enumeration table, compared entry by
/// entry. Throws CrossCheckFailure with a diff report on any disagreement.
DecompTable decomposition_table(std::size_t n, unsigned d, std::size_t cap = kDefaultNestCap);

/// Generating-function table alone; no enumeration cap applies.
DecompTable decomposition_table_genfun(std::size_t n, unsigned d);

/// Direct nest-enumeration table alone (parallel census kernel).
DecompTable decomposition_table_direct(std::size_t n, unsigned d, std::size_t cap = kDefaultNestCap);

/// Human-readable listing of the entries that differ.
std::string table_diff(const DecompTable& a, const DecompTable& b);

BigInt chow_rank(const DecompTable& table, const RankProfile& ranks);
BigInt chow_rank(std::size_t n, unsigned d, const RankProfile& ranks, std::size_t cap = kDefaultNestCap);

/// Total rank of A(P^d[n]) as an integer polynomial in d, with sigma_j
/// evaluated at x = 1 as dj - 1.
IntPoly rank_polynomial(std::size_t n);

/// Poincare polynomial of X[n] in t: sum mult(k,i) t^{2i} P_X(t)^k.
IntPoly poincare(const DecompTable& table, const BettiVector& betti);
IntPoly poincare(std::size_t n, unsigned d, const BettiVector& betti, std::size_t cap = kDefaultNestCap);

}  // namespace wonderful
