#include "fft.hpp"

#include <unsupported/Eigen/FFT>

namespace phasefact::detail {

void fft_forward(std::vector<std::complex<double>>& data) {
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> out;
  fft.fwd(out, data);
  data.swap(out);
}

void fft_backward(std::vector<std::complex<double>>& data) {
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<std::complex<double>> out;
  fft.inv(out, data);
  data.swap(out);
}

}  // namespace phasefact::detail
