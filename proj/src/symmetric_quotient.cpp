#include "wonderful/symmetric_quotient.hpp"

#include "wonderful/errors.hpp"
#include "wonderful/macdonald.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wonderful {

BigInt QuotientDecomp::at(const ForestType& nu, unsigned m) const {
    auto it = entries.find({nu, m});
    return it == entries.end() ? BigInt(0) : it->second;
}

QuotientDecomp quotient_from_forests(std::size_t n, unsigned d, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("quotient: n must be >= 1");
    QuotientDecomp q;
    q.n = n;
    q.d = d;
    for (const auto& f : enumerate_weighted_forests(n, d, cap)) {
        QuotientKey key{f.type(), f.total_weight()};
        q.entries[key] += 1;
        q.forests[key].push_back(f.encoding());
    }
    return q;
}

QuotientDecomp quotient_from_orbits(std::size_t n, unsigned d, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("quotient: n must be >= 1");
    std::map<QuotientKey, std::set<std::string>> seen;
    for_each_nest(n, [&](const Nest& s) {
        for_each_weight_vector(s, d, [&](const WeightVector& mu) {
            const WeightedForest f = forest_of_nest(s, mu);
            seen[{f.type(), f.total_weight()}].insert(f.encoding());
        });
    }, cap);
    QuotientDecomp q;
    q.n = n;
    q.d = d;
    for (auto& [key, codes] : seen) {
        q.entries[key] = static_cast<unsigned long>(codes.size());
        q.forests[key].assign(codes.begin(), codes.end());
    }
    return q;
}

namespace {

std::string key_str(const QuotientKey& k) {
    std::ostringstream os;
    os << "nu={";
    for (std::size_t i = 0; i < k.first.size(); ++i) os << (i ? "," : "") << k.first[i];
    os << "} m=" << k.second;
    return os.str();
}

}  // namespace

QuotientDecomp quotient_decomposition(std::size_t n, unsigned d, std::size_t cap) {
    QuotientDecomp q = quotient_from_forests(n, d, cap);
    if (n > kOrbitOracleMaxN) return q;
    const QuotientDecomp oracle = quotient_from_orbits(n, d, cap);
    if (!q.same_counts(oracle)) {
        std::ostringstream os;
        os << "forest enumeration and orbit count disagree for n=" << n << ", d=" << d << ":\n";
        std::set<QuotientKey> keys;
        for (const auto& [k, v] : q.entries) keys.insert(k);
        for (const auto& [k, v] : oracle.entries) keys.insert(k);
        for (const auto& k : keys)
            if (q.at(k.first, k.second) != oracle.at(k.first, k.second))
                os << "  " << key_str(k) << ": " << q.at(k.first, k.second) << " vs "
                   << oracle.at(k.first, k.second) << "\n";
        throw CrossCheckFailure(os.str());
    }
    return q;
}

BigInt lambda(std::size_t n, unsigned d, const ForestType& nu, unsigned m, std::size_t cap) {
    BigInt count = 0;
    for (const auto& f : enumerate_weighted_forests(n, d, cap))
        if (f.total_weight() == m && f.type() == nu) count += 1;
    return count;
}

MassBalance mass_balance(std::size_t n, unsigned d, std::size_t cap) {
    MassBalance mb;
    for (const auto& f : enumerate_weighted_forests(n, d, cap)) mb.forest_side += labelings_count(f, n);
    for_each_nest(n, [&](const Nest& s) { mb.nest_side += nest_weight_poly(s, d).sum_of_coeffs(); }, cap);
    return mb;
}

IntPoly quotient_poincare(const QuotientDecomp& q, const BettiVector& betti) {
    std::size_t max_part = 1;
    for (const auto& [key, lam] : q.entries)
        for (unsigned p : key.first) max_part = std::max<std::size_t>(max_part, p);
    const PoincareSeries sym = macdonald_series(betti, max_part);
    IntPoly total;
    for (const auto& [key, lam] : q.entries) {
        IntPoly term = IntPoly::monomial(lam, 2 * static_cast<std::size_t>(key.second));
        for (unsigned p : key.first) term *= sym.coeffs[p];
        total += term;
    }
    return total;
}

IntPoly quotient_poincare(std::size_t n, unsigned d, const BettiVector& betti, std::size_t cap) {
    if (betti.b.size() != 2 * static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("Betti vector length " + std::to_string(betti.b.size()) +
                                    " does not match 2d+1 = " + std::to_string(2 * d + 1));
    return quotient_poincare(quotient_decomposition(n, d, cap), betti);
}

}  // namespace wonderful
