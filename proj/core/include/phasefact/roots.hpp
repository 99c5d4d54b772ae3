#pragma once

#include <complex>
#include <span>
#include <vector>

namespace phasefact {

/// All roots of sum_k a_k z^k (a_0 first). Trailing zero coefficients are
/// dropped; the degree-d polynomial is rescaled to balance its end
/// coefficients, solved through the eigenvalues of its balanced companion
/// matrix, and each root is polished by Newton steps on the original
/// polynomial. Leading zeros of `a` (roots at the origin) are returned as
/// exact zeros.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> a);

}  // namespace phasefact
