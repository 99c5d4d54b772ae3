#include "phasefact/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "phasefact/disk_analytic.hpp"
#include "phasefact/errors.hpp"
#include "phasefact/series.hpp"
#include "phasefact/special_functions.hpp"

namespace phasefact {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kImagTolerance = 1e-12;

double checked_real(cplx value) {
  if (std::abs(value.imag()) > kImagTolerance)
    throw std::logic_error("wigner: imaginary residue exceeds 1e-12");
  return value.real();
}

// Coefficients a_q, q = -2n..2n (stored at q + 2n), of 2 pi S(f;n,theta) = sum_q a_q e^{i q theta}.
std::vector<cplx> wigner_harmonics(const FockState& state, std::size_t n) {
  const auto ni = static_cast<long>(n);
  std::vector<cplx> a(4 * n + 1);
  for (long p = -ni; p <= ni; ++p)
    a[static_cast<std::size_t>(2 * p + 2 * ni)] += state[n - p] * std::conj(state[n + p]);
  for (long p = -ni; p <= ni - 1; ++p)
    a[static_cast<std::size_t>(2 * p + 1 + 2 * ni)] +=
        state[static_cast<std::size_t>(ni - p - 1)] * std::conj(state[static_cast<std::size_t>(ni + p)]);
  return a;
}

}  // namespace

double wigner(const FockState& state, std::size_t n, double theta) {
  const auto a = wigner_harmonics(state, n);
  const long shift = 2 * static_cast<long>(n);
  cplx acc{};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == cplx{}) continue;
    acc += a[i] * std::polar(1.0, static_cast<double>(static_cast<long>(i) - shift) * theta);
  }
  return checked_real(acc / kTwoPi);
}

double wigner_integral(const FockState& state, std::size_t n, double theta, std::size_t points) {
  const auto taylor = state.taylor_coeffs();
  const double h = kTwoPi / static_cast<double>(points);
  cplx acc{};
  for (std::size_t k = 0; k < points; ++k) {
    const double phi = -std::numbers::pi + static_cast<double>(k) * h;
    const cplx minus = series::evaluate(taylor, std::polar(1.0, theta - phi));
    const cplx plus = series::evaluate(taylor, std::polar(1.0, theta + phi));
    acc += (1.0 + std::polar(1.0, phi)) * std::polar(1.0, -2.0 * static_cast<double>(n) * phi) *
           std::conj(minus) * plus;
  }
  return (acc * h / (kTwoPi * kTwoPi)).real();
}

WignerGrid::WignerGrid(std::size_t n_max, std::vector<double> theta, std::vector<double> values)
    : n_max_(n_max), theta_(std::move(theta)), values_(std::move(values)) {
  if (values_.size() != (n_max_ + 1) * theta_.size())
    throw std::invalid_argument("WignerGrid: value count does not match the lattice");
}

std::vector<double> WignerGrid::number_marginal() const {
  std::vector<double> out(n_max_ + 1, 0.0);
  const double w = kTwoPi / static_cast<double>(theta_.size());
  for (std::size_t n = 0; n <= n_max_; ++n)
    for (std::size_t j = 0; j < theta_.size(); ++j) out[n] += w * at(n, j);
  return out;
}

std::vector<double> WignerGrid::phase_marginal() const {
  std::vector<double> out(theta_.size(), 0.0);
  for (std::size_t n = 0; n <= n_max_; ++n)
    for (std::size_t j = 0; j < theta_.size(); ++j) out[j] += at(n, j);
  return out;
}

WignerGrid wigner_grid(const FockState& state, std::size_t n_max, std::size_t grid_size) {
  if (!is_power_of_two(grid_size)) throw DomainError("wigner_grid: M must be a power of two");
  auto theta = midpoint_grid(grid_size);
  std::vector<double> values((n_max + 1) * grid_size);
  const double offset = -std::numbers::pi + std::numbers::pi / static_cast<double>(grid_size);
  const auto m = static_cast<long>(grid_size);

  std::vector<cplx> work(grid_size);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto a = wigner_harmonics(state, n);
    std::fill(work.begin(), work.end(), cplx{});
    const long shift = 2 * static_cast<long>(n);
    // e^{i q theta_j} = e^{i q offset} e^{2 pi i q j / M}: fold q into bin q mod M.
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == cplx{}) continue;
      const long q = static_cast<long>(i) - shift;
      const long bin = ((q % m) + m) % m;
      work[static_cast<std::size_t>(bin)] += a[i] * std::polar(1.0, static_cast<double>(q) * offset);
    }
    detail::fft_backward(work);
    for (std::size_t j = 0; j < grid_size; ++j)
      values[n * grid_size + j] = checked_real(work[j] / kTwoPi);
  }
  return WignerGrid(n_max, std::move(theta), std::move(values));
}

double chebyshev_u(long k, double x) {
  if (k < 0) return 0.0;
  double u0 = 1.0;
  if (k == 0) return u0;
  double u1 = 2.0 * x;
  for (long i = 2; i <= k; ++i) {
    const double u2 = 2.0 * x * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

WignerFamily wigner_family_from_tag(const std::string& tag) {
  if (tag == "number") return WignerFamily::number;
  if (tag == "number_out") return WignerFamily::number_out;
  if (tag == "su11_cs") return WignerFamily::su11_cs;
  if (tag == "bg") return WignerFamily::bg;
  if (tag == "blaschke") return WignerFamily::blaschke;
  if (tag == "pi_superposition") return WignerFamily::pi_superposition;
  throw std::invalid_argument("unknown Wigner closed-form tag: " + tag);
}

double wigner_closed_form(WignerFamily family, const WignerParams& params, std::size_t n,
                          double theta) {
  const auto nl = static_cast<long>(n);
  const double r = std::abs(params.z);
  const double phi = std::arg(params.z);
  const double c = std::cos(theta - phi);

  switch (family) {
    case WignerFamily::number:
      return n == params.m ? 1.0 / kTwoPi : 0.0;

    case WignerFamily::number_out: {
      const std::size_t m = params.m;
      const std::size_t k = m % 2 == 0 ? m / 2 : (m + 1) / 2;
      double sum = (n == 0 ? 1.0 : 0.0) + (n == m ? 1.0 : 0.0);
      if (n == k) sum += 2.0 * std::cos(static_cast<double>(m) * theta);
      return sum / (4.0 * std::numbers::pi);
    }

    case WignerFamily::su11_cs: {
      double sum = std::pow(r, 2.0 * nl) * chebyshev_u(2 * nl, c);
      if (n > 0) sum += std::pow(r, 2.0 * nl - 1.0) * chebyshev_u(2 * nl - 1, c);
      return (1.0 - r * r) / kTwoPi * sum;
    }

    case WignerFamily::bg: {
      const double x = 2.0 * r * c;
      // x^k/k! through logs keeps large n finite.
      const auto power_over_factorial = [](double base, long k) {
        if (k == 0) return 1.0;
        if (base == 0.0) return 0.0;
        const double mag = std::exp(k * std::log(std::abs(base)) - std::lgamma(k + 1.0));
        return (base < 0.0 && k % 2 == 1) ? -mag : mag;
      };
      double sum = power_over_factorial(x, 2 * nl);
      if (n > 0) sum += power_over_factorial(x, 2 * nl - 1);
      return sum / (kTwoPi * bessel_i0(2.0 * r));
    }

    case WignerFamily::blaschke: {
      const auto rp = [r](long k) { return k < 0 ? 0.0 : std::pow(r, static_cast<double>(k)); };
      const double sum = rp(2 * nl - 3) * chebyshev_u(2 * nl - 3, c) +
                         (1.0 - 2.0 * r * c) * rp(2 * nl - 2) * chebyshev_u(2 * nl - 2, c) +
                         (r * r - 2.0 * r * c) * rp(2 * nl - 1) * chebyshev_u(2 * nl - 1, c) +
                         rp(2 * nl + 2) * chebyshev_u(2 * nl, c);
      return sum / kTwoPi;
    }

    case WignerFamily::pi_superposition: {
      const double tau = params.tau;
      const double amp2 = 4.0 * (1.0 - r * r) / pi_superposition_norm(params.z, tau);
      const double c2 = std::cos(2.0 * (theta - phi));
      const double half_c = std::cos(0.5 * tau);
      const double half_s = std::sin(0.5 * tau);
      double sum = half_c * half_c * std::pow(r, 2.0 * nl) * chebyshev_u(nl, c2);
      if (n > 0)
        sum += (r * r * half_s * half_s - r * std::sin(tau) * std::sin(theta - phi)) *
               std::pow(r, 2.0 * (nl - 1)) * chebyshev_u(nl - 1, c2);
      return amp2 / kTwoPi * sum;
    }
  }
  throw std::invalid_argument("wigner_closed_form: unknown family");
}

double shift_covariance_check(const FockState& state, const WeylElement& w, std::size_t n_max,
                              std::size_t grid_size) {
  const FockState g = apply(w, state);
  const auto theta = midpoint_grid(grid_size);
  double residual = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (double t : theta) {
      const double lhs = wigner(g, n, t);
      const double rhs = n >= w.m() ? wigner(state, n - w.m(), t - w.beta()) : 0.0;
      residual = std::max(residual, std::abs(lhs - rhs));
    }
  }
  return residual;
}

}  // namespace phasefact
