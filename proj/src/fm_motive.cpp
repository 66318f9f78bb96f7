#include "wonderful/fm_motive.hpp"

#include "wonderful/errors.hpp"
#include "wonderful/kernels.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wonderful {

BigInt DecompTable::at(std::size_t k, long i) const {
    auto it = entries.find({k, i});
    return it == entries.end() ? BigInt(0) : it->second;
}

RankProfile RankProfile::projective(unsigned d, std::size_t n) {
    RankProfile r;
    BigInt p = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        p *= d + 1;
        r.ranks.push_back(p);
    }
    return r;
}

const BigInt& RankProfile::at(std::size_t k) const {
    if (k < 1 || k > ranks.size())
        throw std::invalid_argument("rank profile has no entry for k=" + std::to_string(k));
    return ranks[k - 1];
}

BettiVector::BettiVector(std::vector<long> values) : b(std::move(values)) {
    if (b.empty() || b.size() % 2 == 0)
        throw std::invalid_argument("Betti vector must have length 2d+1, got " + std::to_string(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] < 0) throw std::invalid_argument("negative Betti number b_" + std::to_string(i));
    if (b[0] < 1) throw std::invalid_argument("b_0 must be at least 1");
}

BettiVector BettiVector::projective_space(unsigned d) {
    std::vector<long> v(2 * d + 1, 0);
    for (unsigned i = 0; i <= d; ++i) v[2 * i] = 1;
    return BettiVector(std::move(v));
}

bool BettiVector::satisfies_duality() const {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != b[b.size() - 1 - i]) return false;
    return true;
}

IntPoly BettiVector::poincare() const {
    std::vector<BigInt> c;
    for (long v : b) c.emplace_back(v);
    return IntPoly(std::move(c));
}

IntPoly f_direct(std::size_t n, unsigned d, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("f_direct: n must be >= 1");
    return census_weight_table(nest_census_parallel(n, cap), n, d).at(1);
}

const IntPoly& FRecursion::f(std::size_t n) {
    if (n < 1) throw std::invalid_argument("f_recursive: n must be >= 1");
    if (auto it = memo_.find(n); it != memo_.end()) return it->second;
    IntPoly result;
    if (n == 1) {
        result = 1;
    } else {
        for (std::size_t m = 1; m < n; ++m) f(m);
        for_each_partition(n, [&](const SetPartition& p) {
            if (p.size() < 2) return;
            IntPoly term = sigma(static_cast<unsigned>(p.size() - 1), d_);
            if (term.is_zero()) return;
            for (Block b : p) term *= memo_.at(static_cast<std::size_t>(popcount(b)));
            result += term;
        }, cap_);
    }
    return memo_.emplace(n, std::move(result)).first->second;
}

IntPoly f_recursive(std::size_t n, unsigned d) {
    FRecursion rec(d);
    return rec.f(n);
}

ExpSeries functional_equation_residual(const ExpSeries& N, unsigned d) {
    const std::size_t order = N.order();
    const IntPoly xd = IntPoly::monomial(1, d);
    const IntPoly xd1 = IntPoly::monomial(1, d + 1);
    ExpSeries lhs = ExpSeries::constant(order, IntPoly(1) - xd1);
    if (order >= 1) lhs[1] = (IntPoly(1) - IntPoly::x()) * xd;
    const ExpSeries rhs = egf_sub(egf_exp(egf_scale(N, xd)), egf_scale(egf_exp(N), xd1));
    return egf_sub(lhs, rhs);
}

ExpSeries solve_N(unsigned d, std::size_t order) {
    if (d < 1) throw std::invalid_argument("solve_N: d must be >= 1");
    if (order < 1) throw std::invalid_argument("solve_N: order must be >= 1");
    const IntPoly xd = IntPoly::monomial(1, d);
    const IntPoly xd1 = IntPoly::monomial(1, d + 1);
    const IntPoly divisor = xd - xd1;  // x^d (1 - x)

    ExpSeries N(order);
    // e_a = exp(x^d N), e_b = exp(N), grown alongside N by the derivative
    // recurrence; the unknown f_n enters e_a[n] and e_b[n] only linearly.
    std::vector<IntPoly> ea{IntPoly(1)}, eb{IntPoly(1)};
    for (std::size_t n = 1; n <= order; ++n) {
        IntPoly ra, rb;
        for (std::size_t k = 1; k < n; ++k) {
            const IntPoly c = N[k] * IntPoly(binomial(n - 1, k - 1));
            ra += c * xd * ea[n - k];
            rb += c * eb[n - k];
        }
        IntPoly rhs = n == 1 ? (IntPoly(1) - IntPoly::x()) * xd : IntPoly();
        N[n] = (rhs - ra + xd1 * rb).divexact(divisor);
        ea.push_back(ra + xd * N[n]);
        eb.push_back(rb + N[n]);
    }
    const ExpSeries residual = functional_equation_residual(N, d);
    if (!residual.is_zero()) {
        for (std::size_t n = 0; n <= order; ++n)
            if (!residual[n].is_zero())
                throw CrossCheckFailure("solve_N residual nonzero at t^" + std::to_string(n) + ": " +
                                        residual[n].str());
    }
    return N;
}

FmSession::FmSession(unsigned d, std::size_t order) : d_(d), N_(solve_N(d, order)) {}

const ExpSeries& FmSession::power_over_factorial(unsigned k) {
    if (auto it = powers_.find(k); it != powers_.end()) return it->second;
    ExpSeries p = k == 0 ? ExpSeries::constant(N_.order(), 1)
                         : egf_mul(power_over_factorial(k - 1), N_);
    if (k > 0) {
        for (std::size_t n = 0; n <= p.order(); ++n) p[n] = p[n].divexact(BigInt(k));
    }
    return powers_.emplace(k, std::move(p)).first->second;
}

IntPoly FmSession::component_poly(std::size_t n, std::size_t k) {
    if (n > order()) throw std::out_of_range("session order " + std::to_string(order()) + " below n=" + std::to_string(n));
    return power_over_factorial(static_cast<unsigned>(k))[n];
}

BigInt FmSession::multiplicity(std::size_t n, std::size_t k, long i) {
    return extract(power_over_factorial(static_cast<unsigned>(k)), i, n);
}

BigInt multiplicity(std::size_t n, unsigned d, std::size_t k, long i) {
    FmSession s(d, n);
    return s.multiplicity(n, k, i);
}

BigInt multiplicity_direct(std::size_t n, unsigned d, std::size_t k, long i, std::size_t cap) {
    const auto table = census_weight_table(nest_census_parallel(n, cap), n, d);
    return k < table.size() ? table[k].coeff(i) : BigInt(0);
}

BigInt partition_multiplicity(std::size_t n, unsigned d, const SetPartition& partition, long i) {
    Block seen = 0;
    for (Block b : partition) {
        if (b == 0 || (seen & b)) throw std::invalid_argument("not a set partition");
        seen |= b;
    }
    if (seen != (Block{1} << n) - 1) throw std::invalid_argument("blocks do not cover {1..n}");
    const ExpSeries N = solve_N(d, n);
    IntPoly prod(1);
    for (Block b : partition) prod *= N[static_cast<std::size_t>(popcount(b))];
    return prod.coeff(i);
}

std::vector<IntPoly> bivariate_components(const ExpSeries& N, std::size_t n) {
    if (n > N.order()) throw std::out_of_range("bivariate_components: n beyond order");
    // e[m][k] = [y^k][t^m/m!] exp(yN)
    std::vector<std::vector<IntPoly>> e{{IntPoly(1)}};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<IntPoly> row(m + 1);
        for (std::size_t j = 1; j <= m; ++j) {
            const IntPoly c = N[j] * IntPoly(binomial(m - 1, j - 1));
            if (c.is_zero()) continue;
            const auto& prev = e[m - j];
            for (std::size_t k = 0; k < prev.size(); ++k)
                if (!prev[k].is_zero()) row[k + 1] += c * prev[k];
        }
        e.push_back(std::move(row));
    }
    return e[n];
}

namespace {

DecompTable table_from_polys(std::size_t n, unsigned d, const std::vector<IntPoly>& by_k) {
    DecompTable t;
    t.n = n;
    t.d = d;
    for (std::size_t k = 1; k < by_k.size(); ++k) {
        const auto& c = by_k[k].coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) t.entries[{k, static_cast<long>(i)}] = c[i];
    }
    return t;
}

}  // namespace

DecompTable decomposition_table_genfun(std::size_t n, unsigned d) {
    if (n < 1) throw std::invalid_argument("decomposition_table: n must be >= 1");
    FmSession s(d, n);
    std::vector<IntPoly> by_k(n + 1);
    for (std::size_t k = 1; k <= n; ++k) by_k[k] = s.component_poly(n, k);
    return table_from_polys(n, d, by_k);
}

DecompTable decomposition_table_direct(std::size_t n, unsigned d, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("decomposition_table: n must be >= 1");
    return table_from_polys(n, d, census_weight_table(nest_census_parallel(n, cap), n, d));
}

std::string table_diff(const DecompTable& a, const DecompTable& b) {
    std::ostringstream os;
    std::map<std::pair<std::size_t, long>, std::pair<BigInt, BigInt>> all;
    for (const auto& [key, v] : a.entries) all[key].first = v;
    for (const auto& [key, v] : b.entries) all[key].second = v;
    for (const auto& [key, vals] : all)
        if (vals.first != vals.second)
            os << "  (k=" << key.first << ", i=" << key.second << "): " << vals.first << " vs " << vals.second << "\n";
    return os.str();
}

DecompTable decomposition_table(std::size_t n, unsigned d, std::size_t cap) {
    DecompTable gf = decomposition_table_genfun(n, d);
    const DecompTable direct = decomposition_table_direct(n, d, cap);
    if (!(gf == direct))
        throw CrossCheckFailure("generating function and nest enumeration disagree for n=" + std::to_string(n) +
                                ", d=" + std::to_string(d) + " (genfun vs direct):\n" + table_diff(gf, direct));
    return gf;
}

BigInt chow_rank(const DecompTable& table, const RankProfile& ranks) {
    BigInt total = 0;
    for (const auto& [key, mult] : table.entries) total += mult * ranks.at(key.first);
    return total;
}

BigInt chow_rank(std::size_t n, unsigned d, const RankProfile& ranks, std::size_t cap) {
    return chow_rank(decomposition_table(n, d, cap), ranks);
}

IntPoly rank_polynomial(std::size_t n) {
    if (n < 1) throw std::invalid_argument("rank_polynomial: n must be >= 1");
    // g_k = sigma_{k-1} at x = 1, as a polynomial in d: d(k-1) - 1 for k >= 2
    auto g = [](std::size_t k) { return k < 2 ? IntPoly() : IntPoly{-1, static_cast<long>(k - 1)}; };
    ExpSeries N(n);
    N[1] = 1;
    for (std::size_t m = 2; m <= n; ++m) {
        // f_m only enters N^k/k! at t^m for k = 1, so the k >= 2 terms are known
        ExpSeries p = egf_mul(N, N);
        p = ExpSeries(p.order(), std::vector<IntPoly>(p.coeffs()));
        for (std::size_t j = 0; j <= p.order(); ++j) p[j] = p[j].divexact(BigInt(2));
        IntPoly fm = g(2) * p[m];
        for (std::size_t k = 3; k <= m; ++k) {
            p = egf_mul(p, N);
            for (std::size_t j = 0; j <= p.order(); ++j) p[j] = p[j].divexact(BigInt(static_cast<long>(k)));
            fm += g(k) * p[m];
        }
        N[m] = fm;
    }
    const IntPoly d_plus_1{1, 1};
    IntPoly total;
    ExpSeries p = ExpSeries::constant(n, 1);
    for (std::size_t k = 1; k <= n; ++k) {
        p = egf_mul(p, N);
        for (std::size_t j = 0; j <= p.order(); ++j) p[j] = p[j].divexact(BigInt(static_cast<long>(k)));
        total += d_plus_1.pow(static_cast<unsigned>(k)) * p[n];
    }
    return total;
}

IntPoly poincare(const DecompTable& table, const BettiVector& betti) {
    const IntPoly P = betti.poincare();
    IntPoly total;
    for (const auto& [key, mult] : table.entries)
        total += IntPoly::monomial(mult, static_cast<std::size_t>(2 * key.second)) *
                 P.pow(static_cast<unsigned>(key.first));
    return total;
}

IntPoly poincare(std::size_t n, unsigned d, const BettiVector& betti, std::size_t cap) {
    if (betti.b.size() != 2 * static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("Betti vector length " + std::to_string(betti.b.size()) +
                                    " does not match 2d+1 = " + std::to_string(2 * d + 1));
    return poincare(decomposition_table(n, d, cap), betti);
}

}  // namespace wonderful

namespace wonderful {

namespace {

SigmaPoly sigma_mul(const SigmaPoly& a, const SigmaPoly& b) {
    SigmaPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out[e] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

void integer_partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (n == 0) {
        visit(cur);
        return;
    }
    for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        integer_partitions(n - p, p, cur, visit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SigmaPoly> sigma_expansion(std::size_t order) {
    std::vector<SigmaPoly> f(order + 1);
    if (order >= 1) f[1][{}] = 1;
    for (std::size_t n = 2; n <= order; ++n) {
        std::vector<std::size_t> cur;
        integer_partitions(n, n - 1, cur, [&](const std::vector<std::size_t>& lam) {
            BigInt count = factorial(n);
            for (std::size_t i = 0; i < lam.size();) {
                std::size_t j = i;
                while (j < lam.size() && lam[j] == lam[i]) {
                    count /= factorial(lam[j]);
                    ++j;
                }
                count /= factorial(j - i);
                i = j;
            }
            std::vector<unsigned> e(lam.size() - 1, 0);
            e.back() = 1;
            SigmaPoly term{{e, count}};
            for (std::size_t part : lam) term = sigma_mul(term, f[part]);
            for (const auto& [mono, c] : term) f[n][mono] += c;
        });
    }
    return f;
}

IntPoly evaluate_sigma(const SigmaPoly& p, unsigned d) {
    IntPoly total;
    for (const auto& [e, c] : p) {
        IntPoly term(c);
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) term *= sigma(static_cast<unsigned>(j + 1), d).pow(e[j]);
        total += term;
    }
    return total;
}

std::string sigma_str(const SigmaPoly& p) {
    if (p.empty()) return "0";
    std::vector<std::pair<std::vector<unsigned>, BigInt>> terms(p.begin(), p.end());
    // fewest sigma factors first, then larger indices first
    auto factors = [](const std::vector<unsigned>& e) {
        unsigned k = 0;
        for (unsigned v : e) k += v;
        return k;
    };
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (factors(a.first) != factors(b.first)) return factors(a.first) < factors(b.first);
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        BigInt mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        std::vector<std::string> parts;
        if (mag != 1 || factors(e) == 0) parts.push_back(mag.get_str());
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j]) parts.push_back("s" + std::to_string(j + 1) + (e[j] > 1 ? "^" + std::to_string(e[j]) : ""));
        for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "*" : "") << parts[i];
    }
    return os.str();
}

}  // namespace wonderful
