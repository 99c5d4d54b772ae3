#include "phasefact/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

namespace phasefact {
namespace {

using cplx = std::complex<double>;

struct HornerResult {
  cplx value;
  cplx derivative;
};

HornerResult horner_with_derivative(std::span<const cplx> b, cplx z) {
  cplx p{};
  cplx dp{};
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

// Newton steps on the scaled polynomial; a step is kept only if it lowers |p|.
cplx polish(std::span<const cplx> b, cplx zeta) {
  auto current = horner_with_derivative(b, zeta);
  for (int iter = 0; iter < 4; ++iter) {
    if (current.derivative == cplx{}) break;
    const cplx candidate = zeta - current.value / current.derivative;
    const auto next = horner_with_derivative(b, candidate);
    if (!(std::abs(next.value) < std::abs(current.value))) break;
    zeta = candidate;
    current = next;
  }
  return zeta;
}

}  // namespace

std::vector<cplx> polynomial_roots(std::span<const cplx> a) {
  std::size_t first = 0;
  while (first < a.size() && a[first] == cplx{}) ++first;
  std::size_t last = a.size();
  while (last > first && a[last - 1] == cplx{}) --last;
  if (first == last) return {};

  std::vector<cplx> roots(first, cplx{});
  const std::size_t degree = last - 1 - first;
  if (degree == 0) return roots;

  // z = s * zeta with s chosen so the end coefficients have equal modulus.
  const double log_s =
      (std::log(std::abs(a[first])) - std::log(std::abs(a[last - 1]))) / static_cast<double>(degree);
  std::vector<cplx> b(degree + 1);
  double log_max = -std::numeric_limits<double>::infinity();
  std::vector<double> log_mag(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) {
    const cplx c = a[first + i];
    log_mag[i] = c == cplx{} ? -std::numeric_limits<double>::infinity()
                             : std::log(std::abs(c)) + log_s * static_cast<double>(i);
    log_max = std::max(log_max, log_mag[i]);
  }
  for (std::size_t i = 0; i <= degree; ++i) {
    const cplx c = a[first + i];
    b[i] = c == cplx{} ? cplx{} : std::polar(std::exp(log_mag[i] - log_max), std::arg(c));
  }

  const double s = std::exp(log_s);
  if (degree == 1) {
    roots.push_back(-b[0] / b[1] * s);
    return roots;
  }

  Eigen::Matrix<cplx, Eigen::Dynamic, 1> poly(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) poly(static_cast<Eigen::Index>(i)) = b[i];
  Eigen::PolynomialSolver<cplx, Eigen::Dynamic> solver;
  solver.compute(poly);
  const auto& eig = solver.roots();
  for (Eigen::Index i = 0; i < eig.size(); ++i) roots.push_back(polish(b, eig(i)) * s);
  return roots;
}

}  // namespace phasefact
