#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "phasefact/disk_analytic.hpp"
#include "phasefact/fock_state.hpp"

namespace phasefact {

/// Taylor coefficients of Phi(f;z) = ln Z_out(f;z). phi[0] is real.
struct PhiSeries {
  std::vector<cplx> phi;
  std::size_t grid_size = 0;
};

/// A zero gamma of Z(f;z) inside the unit disk with its multiplicity.
struct BlaschkeZero {
  cplx gamma;
  int multiplicity = 1;
};

struct ZeroSet {
  std::vector<BlaschkeZero> zeros;       // |gamma| < 1 - edge_margin, gamma != 0
  std::vector<BlaschkeZero> edge_zeros;  // 1 - edge_margin <= |gamma| < 1: unreliable
  std::size_t origin_order = 0;          // multiplicity of the zero at z = 0
};

/// Half-width, in |ln|zeta||, of the annulus around the unit circle whose
/// zeros are removed analytically before the cepstral transform on an
/// M-point grid. Zeros outside the annulus leave Fourier coefficients that
/// decay below 1e-15 before M/2.
double near_circle_band(std::size_t grid_size);

/// Cepstral analytic completion of ln|Theta|: with c_k the Fourier
/// coefficients of samples.log_abs, phi_0 = c_0 and phi_k = 2 c_k.
PhiSeries compute_phi(const BoundarySamples& samples, std::size_t length);

/// As above, but the log-modulus of every linear factor (e^{i theta} - zeta)
/// for zeta in `near_circle_zeros` is subtracted from the samples first and
/// its exact analytic logarithm added back to the series. Removes the slow
/// Fourier decay caused by zeros on or near the unit circle.
PhiSeries compute_phi(const BoundarySamples& samples, std::size_t length,
                      std::span<const cplx> near_circle_zeros);

/// exp(Phi) as a Taylor series of the given length; b_0 = e^{phi_0} > 0.
std::vector<cplx> outer_part(const PhiSeries& phi, std::size_t length);

struct InnerPart {
  std::vector<cplx> coeffs;
  double boundary_deviation = 0.0;  // max_j ||Theta_in(theta_j)| - 1|
};

/// Z(f;z)/Z_out(f;z) by series division, with the inner criterion checked
/// on an M-point boundary grid.
InnerPart inner_part(const FockState& state, std::span<const cplx> outer, std::size_t grid_size);

inline constexpr double kInfiniteDefect = std::numeric_limits<double>::infinity();

/// Mean of ln|Theta| minus ln|Z(f;0)|; zero iff the state is outer. Returns
/// kInfiniteDefect when f_0 = 0. Small negatives above -1e-8 are clamped to
/// zero. The overload without zeros computes the near-circle zeros itself.
double outer_defect(const FockState& state, const BoundarySamples& samples);
double outer_defect(const FockState& state, const BoundarySamples& samples,
                    std::span<const cplx> near_circle_zeros);

/// Zeros of the truncated polynomial sum_n f_n^* z^n inside the unit disk,
/// clustered into multiplicities.
ZeroSet blaschke_zeros(const FockState& state, double edge_margin = 1e-3,
                       double cluster_radius = 1e-7);

/// Taylor coefficients of prod_k ((gamma_k^*/|gamma_k|)(gamma_k - z)/(1 - gamma_k^* z))^{p_k}.
/// Throws DomainError for gamma = 0 (use the monomial z^p) or |gamma| >= 1.
std::vector<cplx> blaschke_product(std::span<const BlaschkeZero> zeros, std::size_t length);

struct FactorOptions {
  std::size_t grid_size = 0;      // 0: default_grid_size(N)
  std::size_t series_length = 0;  // 0: grid_size / 2
  double edge_margin = 1e-3;
  double cluster_radius = 1e-7;
  double outer_tol = 1e-6;
  double inner_tol = 1e-6;
};

struct FactoredState {
  std::size_t truncation = 0;
  std::size_t grid_size = 0;
  PhiSeries phi;
  std::vector<cplx> outer_coeffs;
  std::vector<cplx> inner_coeffs;
  ZeroSet zeros;
  double outer_defect = 0.0;           // kInfiniteDefect when f_0 = 0
  double reduced_outer_defect = 0.0;   // defect after dividing out z^origin_order
  double blaschke_defect = 0.0;        // sum_k p_k ln(1/|gamma_k|), edge zeros included
  double reconstruction_residual = 0.0;
  double inner_boundary_deviation = 0.0;
  double refinement_delta = 0.0;       // max_k |phi_k(M) - phi_k(2M)|
  bool singular_suspected = false;
  bool ill_conditioned = false;

  bool is_outer(double outer_tol) const { return outer_defect < outer_tol; }
};

/// boundary -> near-circle zeros -> compute_phi -> outer_part -> inner_part
/// -> blaschke_zeros. A leading monomial z^k is divided out before the
/// zero search and reported as zeros.origin_order.
FactoredState factorize(const FockState& state, const FactorOptions& options = {});

}  // namespace phasefact
