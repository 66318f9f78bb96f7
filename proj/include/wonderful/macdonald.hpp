#pragma once

#include "wonderful/fm_motive.hpp"
#include "wonderful/int_poly.hpp"

#include <cstddef>
#include <vector>

namespace wonderful {

/// sum_n P_t(X^(n)) T^n truncated at T^order; coeffs[n] is a polynomial in t.
struct PoincareSeries {
    std::size_t order = 0;
    std::vector<IntPoly> coeffs;
};

/// prod_{i odd} (1 + t^i T)^{b_i} / prod_{i even} (1 - t^i T)^{b_i}, expanded
/// exactly through T^order.
PoincareSeries macdonald_series(const BettiVector& betti, std::size_t order);

/// Coefficient of T^n in macdonald_series.
IntPoly symmetric_product_poincare(const BettiVector& betti, std::size_t n);

}  // namespace wonderful
