#include "phasefact/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace phasefact::series {

cplx evaluate(std::span<const cplx> a, cplx z) {
  cplx acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<cplx> multiply(std::span<const cplx> a, std::span<const cplx> b, std::size_t length) {
  std::vector<cplx> out(length);
  for (std::size_t i = 0; i < std::min(a.size(), length); ++i) {
    if (a[i] == cplx{}) continue;
    const std::size_t jmax = std::min(b.size(), length - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<cplx> exp(std::span<const cplx> a, std::size_t length) {
  std::vector<cplx> b(length);
  if (length == 0) return b;
  b[0] = a.empty() ? cplx{1.0} : std::exp(a[0]);
  for (std::size_t n = 1; n < length; ++n) {
    cplx acc{};
    const std::size_t kmax = std::min(n, a.size() - (a.empty() ? 0 : 1));
    for (std::size_t k = 1; k <= kmax; ++k) acc += static_cast<double>(k) * a[k] * b[n - k];
    b[n] = acc / static_cast<double>(n);
  }
  return b;
}

std::vector<cplx> divide(std::span<const cplx> a, std::span<const cplx> b, std::size_t length) {
  if (b.empty() || b[0] == cplx{}) throw std::invalid_argument("series::divide: b_0 must be nonzero");
  std::vector<cplx> c(length);
  for (std::size_t n = 0; n < length; ++n) {
    cplx acc = n < a.size() ? a[n] : cplx{};
    const std::size_t kmax = std::min(n, b.size() - 1);
    for (std::size_t k = 1; k <= kmax; ++k) acc -= b[k] * c[n - k];
    c[n] = acc / b[0];
  }
  return c;
}

}  // namespace phasefact::series
