#include "phasefact/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "phasefact/errors.hpp"

namespace phasefact {
namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum;
}

// e^x / sqrt(2 pi x) * sum_k prod_{j<=k} (2j-1)^2 / (k! (8x)^k)
double i0_asymptotic(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2.0 * k - 1) * (2.0 * k - 1) / (k * 8.0 * x);
    if (next > term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return std::exp(x) / std::sqrt(2.0 * std::numbers::pi * x) * sum;
}

// K0 = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} (x^2/4)^k / (k!)^2 H_k
double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double harmonic = 0.0;
  double tail = 0.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    harmonic += 1.0 / k;
    tail += term * harmonic;
    if (term * harmonic < 1e-17 * std::abs(tail)) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0_series(x) + tail;
}

// K0(x) = int_0^inf exp(-x cosh t) dt by the trapezoid rule, which converges
// geometrically for this entire, doubly decaying integrand. Near t = 0 it is
// a Gaussian of width 1/sqrt(x); the step keeps h sqrt(x) <= 0.8.
double k0_integral(double x) {
  const double h = std::min(0.2, 0.8 / std::sqrt(x));
  double sum = 0.5 * std::exp(-x);
  for (int k = 1; k < 1000; ++k) {
    const double t = k * h;
    const double excess = x * (std::cosh(t) - 1.0);
    if (excess > 45.0) break;
    sum += std::exp(-x - excess);
  }
  return h * sum;
}

}  // namespace

double bessel_i0(double x) {
  x = std::abs(x);
  return x < 20.0 ? i0_series(x) : i0_asymptotic(x);
}

double bessel_k0(double x) {
  if (!(x > 0.0)) throw DomainError("bessel_k0: argument must be positive");
  return x <= 2.0 ? k0_series(x) : k0_integral(x);
}

}  // namespace phasefact
