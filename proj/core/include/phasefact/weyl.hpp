#pragma once

#include <complex>
#include <cstddef>

#include "phasefact/fock_state.hpp"

namespace phasefact {

/// Angle mapped to (-pi, pi].
double canonical_angle(double angle);

/// Element W(m, beta, gamma) = E_+^m exp(i beta N) exp(i gamma) of the
/// number-phase Weyl semigroup. Angles are stored canonically.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::size_t m, double beta, double gamma);

  std::size_t m() const { return m_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }

  static WeylElement identity() { return {}; }

 private:
  std::size_t m_ = 0;
  double beta_ = 0.0;
  double gamma_ = 0.0;
};

/// W1 W2 = W(m1+m2, beta1+beta2, gamma1+gamma2+m2 beta1).
WeylElement compose(const WeylElement& w1, const WeylElement& w2);

/// g_{n+m} = e^{i beta n + i gamma} f_n; truncation grows by m, norm defect unchanged.
FockState apply(const WeylElement& w, const FockState& state);

/// Adjoint action W^dagger: drops the first m coefficients after undoing the phases.
FockState apply_adjoint(const WeylElement& w, const FockState& state);

/// E_+^m |f>.
FockState shift(const FockState& state, std::size_t m);

struct TransformationDiagnostics {
  double analytic_residual = 0.0;  // Z(g;z) vs e^{-i gamma} z^m Z(f; z e^{-i beta})
  double phi_residual = 0.0;       // Phi(g;z) vs Phi(f; z e^{-i beta})
  double inner_residual = 0.0;     // Z_in(g;z) vs e^{-i gamma} z^m Z_in(f; z e^{-i beta})
  double boundary_residual = 0.0;  // Theta(g;theta) vs e^{i m theta - i gamma} Theta(f; theta - beta)

  double max() const;
};

/// Checks the transformation laws of g = W f on a fixed set of interior
/// sample points and on the boundary grid used by factorize.
TransformationDiagnostics transformation_check(const WeylElement& w, const FockState& state);

enum class EigenFamily { su11_cs, bg };

/// Coefficient-level residual of the eigenvalue relation satisfied by the
/// shifted state |label>_m:
///   su11_cs: (E_- - |m-1><m|) psi = z psi
///   bg:      E_- (N - m) psi = u psi
/// Rows that would need the coefficient beyond the truncation are skipped.
double eigenrelation_check(EigenFamily family, cplx label, const FockState& shifted, std::size_t m);

}  // namespace phasefact
