#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phasefact/fock_state.hpp"
#include "phasefact/weyl.hpp"

namespace phasefact {

/// Number-phase Wigner function S(f;n,theta), finite double-sum form.
double wigner(const FockState& state, std::size_t n, double theta);

/// S(f;n,theta) from the phi-integral of the boundary function, by an
/// `points`-point trapezoid rule. Kept as an independent cross-check.
double wigner_integral(const FockState& state, std::size_t n, double theta, std::size_t points);

class WignerGrid {
 public:
  WignerGrid(std::size_t n_max, std::vector<double> theta, std::vector<double> values);

  std::size_t n_max() const { return n_max_; }
  const std::vector<double>& theta() const { return theta_; }
  double at(std::size_t n, std::size_t j) const { return values_[n * theta_.size() + j]; }
  const std::vector<double>& values() const { return values_; }

  /// (2pi/M) sum_j S(n, theta_j) for n = 0..n_max.
  std::vector<double> number_marginal() const;
  /// sum_n S(n, theta_j) for each grid angle.
  std::vector<double> phase_marginal() const;

 private:
  std::size_t n_max_;
  std::vector<double> theta_;
  std::vector<double> values_;
};

/// S on (0..n_max) x (M-point midpoint grid).
WignerGrid wigner_grid(const FockState& state, std::size_t n_max, std::size_t grid_size);

enum class WignerFamily { number, number_out, su11_cs, bg, blaschke, pi_superposition };

struct WignerParams {
  std::size_t m = 0;  // number, number_out
  cplx z{};           // su11_cs, blaschke, pi_superposition (z), bg (u)
  double tau = 0.0;   // pi_superposition
};

/// Closed-form S for the catalog states. Chebyshev U_k are evaluated by the
/// three-term recurrence with U_k = 0 for k < 0.
double wigner_closed_form(WignerFamily family, const WignerParams& params, std::size_t n,
                          double theta);

/// Parses "number", "number_out", "su11_cs", "bg", "blaschke", "pi_superposition".
/// Throws std::invalid_argument on an unknown tag.
WignerFamily wigner_family_from_tag(const std::string& tag);

/// Chebyshev polynomial of the second kind, U_k(x) = 0 for k < 0.
double chebyshev_u(long k, double x);

/// max |S(g;n,theta) - S(f;n-m,theta-beta)| (n >= m) and |S(g;n,theta)| (n < m)
/// over n <= n_max and an M-point theta grid, g = W f.
double shift_covariance_check(const FockState& state, const WeylElement& w, std::size_t n_max,
                              std::size_t grid_size);

}  // namespace phasefact
