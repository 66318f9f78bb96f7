#include "wonderful/chern.hpp"

#include "wonderful/errors.hpp"

#include <sstream>

namespace wonderful {

void FormalChernPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FormalChernPoly FormalChernPoly::constant(std::size_t roots, const BigInt& c) {
    FormalChernPoly p(roots);
    p.add_term(Exponents(roots + 1, 0), c);
    return p;
}

FormalChernPoly FormalChernPoly::var(std::size_t roots, std::size_t index) {
    FormalChernPoly p(roots);
    Exponents e(roots + 1, 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
}

FormalChernPoly FormalChernPoly::from_x_poly(std::size_t roots, const IntPoly& q) {
    FormalChernPoly p(roots);
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
        Exponents e(roots + 1, 0);
        e[0] = static_cast<unsigned>(k);
        p.add_term(e, q.coeffs()[k]);
    }
    return p;
}

FormalChernPoly& FormalChernPoly::operator+=(const FormalChernPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

FormalChernPoly& FormalChernPoly::operator-=(const FormalChernPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

FormalChernPoly operator*(const FormalChernPoly& a, const FormalChernPoly& b) {
    FormalChernPoly r(a.roots());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            FormalChernPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

FormalChernPoly FormalChernPoly::pow(unsigned k) const {
    FormalChernPoly r = constant(roots(), 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

FormalChernPoly FormalChernPoly::root_degree_part(unsigned k) const {
    FormalChernPoly r(roots());
    for (const auto& [e, c] : terms_) {
        unsigned deg = 0;
        for (std::size_t i = 1; i < e.size(); ++i) deg += e[i];
        if (deg == k) r.add_term(e, c);
    }
    return r;
}

std::string FormalChernPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            os << "*" << (i == 0 ? std::string("x") : "a" + std::to_string(i));
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

FormalChernPoly elementary_symmetric(std::size_t roots, const std::vector<std::size_t>& idx, unsigned k) {
    FormalChernPoly sum(roots);
    if (k > idx.size()) return sum;
    std::vector<std::size_t> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = i;
    const std::size_t m = idx.size();
    while (true) {
        FormalChernPoly term = FormalChernPoly::constant(roots, 1);
        for (std::size_t p : pick) term = term * FormalChernPoly::root(roots, idx[p]);
        sum += term;
        // next k-combination of {0..m-1}
        long i = static_cast<long>(k) - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return sum;
}

namespace {

// sum_i e_i(listed roots) (1+x)^{|roots|-i}
FormalChernPoly chern_expansion(std::size_t nroots, const std::vector<std::size_t>& idx) {
    const FormalChernPoly one_plus_x = FormalChernPoly::from_x_poly(nroots, IntPoly{1, 1});
    FormalChernPoly sum(nroots);
    const auto rank = static_cast<unsigned>(idx.size());
    for (unsigned i = 0; i <= rank; ++i) sum += elementary_symmetric(nroots, idx, i) * one_plus_x.pow(rank - i);
    return sum;
}

FormalChernPoly root_product(std::size_t nroots, const std::vector<std::size_t>& idx) {
    const FormalChernPoly one_plus_x = FormalChernPoly::from_x_poly(nroots, IntPoly{1, 1});
    FormalChernPoly prod = FormalChernPoly::constant(nroots, 1);
    for (std::size_t j : idx) prod = prod * (one_plus_x + FormalChernPoly::root(nroots, j));
    return prod;
}

}  // namespace

ChernWitness twisted_chern_identity(unsigned r, unsigned d) {
    if (r < 1) throw std::invalid_argument("twisted_chern_identity: rank must be >= 1");
    ChernWitness w;

    std::vector<std::size_t> idx(r);
    for (unsigned j = 0; j < r; ++j) idx[j] = j + 1;
    w.root_identity = root_product(r, idx) == chern_expansion(r, idx);
    if (!w.root_identity) throw Error("Chern root identity failed for rank " + std::to_string(r));

    if (d >= 1) {
        std::vector<std::size_t> tangent(d);
        for (unsigned j = 0; j < d; ++j) tangent[j] = j + 1;
        const FormalChernPoly one_plus_x = FormalChernPoly::from_x_poly(d, IntPoly{1, 1});
        FormalChernPoly zeta(d);
        for (unsigned i = 0; i <= d; ++i) zeta += elementary_symmetric(d, tangent, i) * one_plus_x.pow(d - i);

        FormalChernPoly total_tangent(d);
        for (unsigned i = 0; i <= d; ++i) total_tangent += elementary_symmetric(d, tangent, i);

        for (unsigned c = 2; c <= 3; ++c) {
            // N has the roots of T repeated c-1 times, so c(N) = c(T)^(c-1)
            std::vector<std::size_t> normal;
            for (unsigned rep = 0; rep + 1 < c; ++rep) normal.insert(normal.end(), tangent.begin(), tangent.end());
            const unsigned rank = d * (c - 1);
            const FormalChernPoly cN = total_tangent.pow(c - 1);
            FormalChernPoly twisted(d);
            for (unsigned i = 0; i <= rank; ++i) twisted += cN.root_degree_part(i) * one_plus_x.pow(rank - i);

            const FormalChernPoly by_roots = root_product(d, normal);
            const bool ok = by_roots == twisted && twisted == zeta.pow(c - 1);
            w.tested_c.push_back(c);
            if (!ok) {
                w.zeta_identity = false;
                throw Error("zeta specialization failed for d=" + std::to_string(d) + ", c=" + std::to_string(c));
            }
        }
    }
    return w;
}

}  // namespace wonderful
