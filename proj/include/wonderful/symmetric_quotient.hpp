#pragma once

#include "wonderful/fm_motive.hpp"
#include "wonderful/forest.hpp"
#include "wonderful/int_poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wonderful {

/// Largest n for which quotient_decomposition runs the labeled-orbit oracle.
inline constexpr std::size_t kOrbitOracleMaxN = 6;

using QuotientKey = std::pair<ForestType, unsigned>;  // (nu, m)

struct QuotientDecomp {
    std::size_t n = 0;
    unsigned d = 0;
    std::map<QuotientKey, BigInt> entries;                // lambda(nu, m), zeros omitted
    std::map<QuotientKey, std::vector<std::string>> forests;  // canonical encodings per key

    BigInt at(const ForestType& nu, unsigned m) const;
    /// Same (nu, m) -> lambda table, ignoring the forest listings.
    bool same_counts(const QuotientDecomp& o) const { return n == o.n && d == o.d && entries == o.entries; }
};

/// Number of weighted forests with n leaves of type nu and total weight m.
BigInt lambda(std::size_t n, unsigned d, const ForestType& nu, unsigned m, std::size_t cap = kDefaultNestCap);

/// The lambda table from enumerate_weighted_forests alone.
QuotientDecomp quotient_from_forests(std::size_t n, unsigned d, std::size_t cap = kDefaultNestCap);

/// Oracle: every labeled (S, mu) on {1..n} is mapped to its unlabeled forest;
/// distinct forests are then counted per (nu, m).
QuotientDecomp quotient_from_orbits(std::size_t n, unsigned d, std::size_t cap = kDefaultNestCap);

/// Forest table, checked against quotient_from_orbits when n <= kOrbitOracleMaxN.
/// Throws CrossCheckFailure on disagreement.
QuotientDecomp quotient_decomposition(std::size_t n, unsigned d, std::size_t cap = kDefaultNestCap);

struct MassBalance {
    BigInt forest_side;  // sum over forests of n!/|Aut|
    BigInt nest_side;    // sum over nests of |M_S|
    bool holds() const { return forest_side == nest_side; }
};

MassBalance mass_balance(std::size_t n, unsigned d, std::size_t cap = kDefaultNestCap);

/// sum lambda(nu, m) t^{2m} prod_i P_t(X^(n_i)).
IntPoly quotient_poincare(const QuotientDecomp& q, const BettiVector& betti);
IntPoly quotient_poincare(std::size_t n, unsigned d, const BettiVector& betti, std::size_t cap = kDefaultNestCap);

}  // namespace wonderful
