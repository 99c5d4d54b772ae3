#include "phasefact/disk_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "phasefact/errors.hpp"

namespace phasefact {

bool is_power_of_two(std::size_t m) { return m != 0 && (m & (m - 1)) == 0; }

std::size_t default_grid_size(std::size_t truncation) {
  std::size_t m = 2;
  while (m < 4 * truncation) m *= 2;
  return m;
}

std::vector<double> midpoint_grid(std::size_t grid_size) {
  std::vector<double> theta(grid_size);
  const double step = std::numbers::pi / static_cast<double>(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j)
    theta[j] = -std::numbers::pi + static_cast<double>(2 * j + 1) * step;
  return theta;
}

cplx eval_Z(const FockState& state, cplx z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("eval_Z: |z| must be < 1");
  cplx acc{};
  const auto f = state.coeffs();
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * z + std::conj(*it);
  return acc;
}

double eval_Z_error_bound(const FockState& state, cplx z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw DomainError("eval_Z_error_bound: |z| must be < 1");
  return std::sqrt(state.norm_defect()) * std::pow(r, static_cast<double>(state.truncation())) /
         (1.0 - r);
}

BoundarySamples boundary_of_series(std::span<const cplx> taylor, std::size_t grid_size) {
  if (!is_power_of_two(grid_size))
    throw DomainError("boundary: grid size " + std::to_string(grid_size) +
                      " is not a power of two");
  if (taylor.size() > grid_size) throw AliasingError("boundary: series longer than the grid");

  // Theta(theta_j) = sum_n a_n e^{i n (-pi + pi/M)} e^{2 pi i n j / M}
  const double offset = -std::numbers::pi + std::numbers::pi / static_cast<double>(grid_size);
  std::vector<cplx> work(grid_size);
  for (std::size_t n = 0; n < taylor.size(); ++n)
    work[n] = taylor[n] * std::polar(1.0, offset * static_cast<double>(n));
  detail::fft_backward(work);

  BoundarySamples out;
  out.grid_size = grid_size;
  out.theta = midpoint_grid(grid_size);
  out.log_abs.resize(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double a = std::abs(work[j]);
    out.log_abs[j] = a > 0.0 ? std::max(std::log(a), kLogAbsFloor) : kLogAbsFloor;
  }
  out.values = std::move(work);
  return out;
}

BoundarySamples boundary(const FockState& state, std::size_t grid_size) {
  if (grid_size < 2 * state.truncation())
    throw AliasingError("boundary: grid size " + std::to_string(grid_size) + " < 2N = " +
                        std::to_string(2 * state.truncation()));
  const auto taylor = state.taylor_coeffs();
  return boundary_of_series(taylor, grid_size);
}

std::vector<double> phase_distribution(const BoundarySamples& samples) {
  std::vector<double> p(samples.grid_size);
  for (std::size_t j = 0; j < p.size(); ++j)
    p[j] = std::norm(samples.values[j]) / (2.0 * std::numbers::pi);
  return p;
}

std::vector<double> phase_distribution(const FockState& state, std::size_t grid_size) {
  return phase_distribution(boundary(state, grid_size));
}

cplx cauchy_kernel(double r, double theta) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("cauchy_kernel: need 0 <= r < 1");
  return 1.0 / (1.0 - std::polar(r, theta));
}

double poisson_kernel(double r, double theta) { return (2.0 * cauchy_kernel(r, theta) - 1.0).real(); }

double conjugate_kernel(double r, double theta) {
  return (2.0 * cauchy_kernel(r, theta) - 1.0).imag();
}

cplx reconstruct_from_boundary(const BoundarySamples& samples, cplx z) {
  const double r = std::abs(z);
  if (!(r <= 0.99))
    throw IllConditionedError("reconstruct_from_boundary: |z| > 0.99 is too close to the circle");
  const double phi = std::arg(z);
  cplx acc{};
  for (std::size_t j = 0; j < samples.grid_size; ++j)
    acc += cauchy_kernel(r, phi - samples.theta[j]) * samples.values[j];
  return acc / static_cast<double>(samples.grid_size);
}

}  // namespace phasefact
