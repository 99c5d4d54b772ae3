#pragma once

#include <complex>
#include <vector>

namespace phasefact::detail {

/// X_k = sum_j x_j e^{-2 pi i jk/M}, in place.
void fft_forward(std::vector<std::complex<double>>& data);

/// x_j = sum_k X_k e^{+2 pi i jk/M}, in place, unscaled.
void fft_backward(std::vector<std::complex<double>>& data);

}  // namespace phasefact::detail
