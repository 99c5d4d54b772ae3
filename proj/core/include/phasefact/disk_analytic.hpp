#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "phasefact/fock_state.hpp"

namespace phasefact {

inline constexpr double kLogAbsFloor = -700.0;

/// Samples of the boundary function Theta(f;theta) = sum_n f_n^* e^{i n theta}
/// on the midpoint grid theta_j = -pi + (2j+1)pi/M.
struct BoundarySamples {
  std::size_t grid_size = 0;
  std::vector<double> theta;
  std::vector<cplx> values;
  std::vector<double> log_abs;  // ln|Theta|, clamped below at kLogAbsFloor
};

/// theta_j = -pi + (2j+1)pi/M, j = 0..M-1.
std::vector<double> midpoint_grid(std::size_t grid_size);

/// Default boundary grid: smallest power of two >= 4N.
std::size_t default_grid_size(std::size_t truncation);

bool is_power_of_two(std::size_t m);

/// Z(f;z) = sum_n f_n^* z^n for |z| < 1; throws DomainError otherwise.
cplx eval_Z(const FockState& state, cplx z);

/// Upper bound on |Z(f;z) - eval_Z(f,z)| from the truncated tail.
double eval_Z_error_bound(const FockState& state, cplx z);

/// Boundary function on an M-point midpoint grid via a zero-padded FFT.
/// Throws AliasingError if M < 2N and DomainError if M is not a power of two.
BoundarySamples boundary(const FockState& state, std::size_t grid_size);

/// Same transform for an arbitrary Taylor series a_k (no aliasing check
/// beyond a.size() <= M).
BoundarySamples boundary_of_series(std::span<const cplx> taylor, std::size_t grid_size);

/// P(theta_j) = |Theta(theta_j)|^2 / (2 pi).
std::vector<double> phase_distribution(const BoundarySamples& samples);
std::vector<double> phase_distribution(const FockState& state, std::size_t grid_size);

/// Cauchy kernel C(r,theta) = 1/(1 - r e^{i theta}); 0 <= r < 1.
cplx cauchy_kernel(double r, double theta);
/// Poisson kernel Re(2C - 1).
double poisson_kernel(double r, double theta);
/// Conjugate Poisson kernel Im(2C - 1).
double conjugate_kernel(double r, double theta);

/// Z(f;z) rebuilt from boundary samples by trapezoidal quadrature of the
/// Cauchy integral. Throws IllConditionedError for |z| > 0.99.
cplx reconstruct_from_boundary(const BoundarySamples& samples, cplx z);

}  // namespace phasefact
