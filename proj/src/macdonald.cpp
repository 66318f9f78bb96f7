#include "wonderful/macdonald.hpp"

namespace wonderful {

PoincareSeries macdonald_series(const BettiVector& betti, std::size_t order) {
    PoincareSeries s;
    s.order = order;
    s.coeffs.assign(order + 1, IntPoly());
    s.coeffs[0] = 1;
    for (std::size_t i = 0; i < betti.b.size(); ++i) {
        const long b = betti.b[i];
        if (b == 0) continue;
        // factor F(T) = sum_k a_k t^{ik} T^k
        std::vector<IntPoly> factor(order + 1);
        for (std::size_t k = 0; k <= order; ++k) {
            BigInt a = i % 2 ? binomial(static_cast<unsigned long>(b), k)
                             : binomial(static_cast<unsigned long>(b) + k - 1, k);
            if (a != 0) factor[k] = IntPoly::monomial(a, i * k);
        }
        std::vector<IntPoly> next(order + 1);
        for (std::size_t p = 0; p <= order; ++p) {
            if (s.coeffs[p].is_zero()) continue;
            for (std::size_t k = 0; p + k <= order; ++k)
                if (!factor[k].is_zero()) next[p + k] += s.coeffs[p] * factor[k];
        }
        s.coeffs = std::move(next);
    }
    return s;
}

IntPoly symmetric_product_poincare(const BettiVector& betti, std::size_t n) {
    return macdonald_series(betti, n).coeffs[n];
}

}  // namespace wonderful
