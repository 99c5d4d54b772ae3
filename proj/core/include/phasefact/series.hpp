#pragma once

// Truncated power-series arithmetic. Every series is a coefficient vector
// a_0, a_1, ... of sum_k a_k z^k; results are truncated to the stated length.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace phasefact::series {

using cplx = std::complex<double>;

/// Horner evaluation of sum_k a_k z^k.
cplx evaluate(std::span<const cplx> a, cplx z);

/// First `length` coefficients of a*b.
std::vector<cplx> multiply(std::span<const cplx> a, std::span<const cplx> b, std::size_t length);

/// First `length` coefficients of exp(a) by the recurrence
/// n b_n = sum_{k=1}^{n} k a_k b_{n-k}, b_0 = exp(a_0).
std::vector<cplx> exp(std::span<const cplx> a, std::size_t length);

/// First `length` coefficients of a/b. Requires b_0 != 0.
std::vector<cplx> divide(std::span<const cplx> a, std::span<const cplx> b, std::size_t length);

}  // namespace phasefact::series
