#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "phasefact/factorization.hpp"
#include "phasefact/fock_state.hpp"

namespace phasefact {

/// Barut-Girardello function a*delta(u) + sum_n g_n u^n.
///
/// The delta is symmetric about u = 0: it carries weight a/2 on the half
/// line, so L[2 delta] = 1 and an endpoint delta in a convolution picks up
/// half its weight.
struct BGFunction {
  cplx atom{};
  std::vector<cplx> smooth;
  double radius_hint = 0.0;  // |u| up to which the smooth truncation error is < 1e-10

  /// Smooth part only.
  cplx operator()(cplx u) const;
};

/// U(f;u) = sum_n f_n^* u^n / n!.
BGFunction bg_function(const FockState& state);

/// (1/z) int_0^inf U(u) e^{-u/z} du + atom/(2z) by adaptive Gauss-Legendre
/// panels along the positive real axis. Requires Re z > 0 and |z| < 1.
cplx laplace_to_disk(const BGFunction& u_fn, cplx z);

struct BGFactorParts {
  BGFunction inner;  // L^{-1}[z Z_in]:  g_n = c_n / n!
  BGFunction outer;  // L^{-1}[Z_out]:   atom 2 b_0, g_{n-1} = b_n/(n-1)!
};

BGFactorParts bg_factor_parts(const FactoredState& factored);

/// int_0^u U_in(x) U_out(u - x) dx along the segment 0 -> u, with endpoint
/// deltas at half weight. 64-point Gauss-Legendre.
cplx bg_convolve(const BGFunction& u_in, const BGFunction& u_out, cplx u);

/// False when |u| exceeds either factor's radius_hint, i.e. bg_convolve at u
/// is not covered by the 1e-10 truncation guarantee.
bool within_validated_radius(const BGFunction& u_in, const BGFunction& u_out, cplx u);

enum class ShiftRoute {
  integral_of_u,      // (1/(m-1)!) int_0^u (u-x)^{m-1} U(f;x) dx, m >= 1
  integral_of_outer,  // (1/m!) int_0^u (u-x)^m U_out(f;x) dx, outer states
};

/// BG function of the shifted state E_+^m |f> at u.
cplx bg_shifted(const FockState& state, std::size_t m, cplx u,
                ShiftRoute route = ShiftRoute::integral_of_u);

/// Density (2/pi) K0(2|u|) I0(2|u|) of the BG identity resolution.
/// Throws DomainError at u = 0 where K0 diverges.
double bg_measure_weight(cplx u);

/// Matrix of int d mu(u) <n|u><u|m> for n, m <= n_max by radial
/// Gauss-Legendre panels times an angular trapezoid rule.
std::vector<std::vector<cplx>> bg_identity_resolution(std::size_t n_max,
                                                      std::size_t angular_points = 32);

}  // namespace phasefact
