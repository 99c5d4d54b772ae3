#include "phasefact/weyl.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "phasefact/disk_analytic.hpp"
#include "phasefact/factorization.hpp"
#include "phasefact/series.hpp"

namespace phasefact {

double canonical_angle(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::remainder(angle, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

WeylElement::WeylElement(std::size_t m, double beta, double gamma)
    : m_(m), beta_(canonical_angle(beta)), gamma_(canonical_angle(gamma)) {}

WeylElement compose(const WeylElement& w1, const WeylElement& w2) {
  return WeylElement(w1.m() + w2.m(), w1.beta() + w2.beta(),
                     w1.gamma() + w2.gamma() + static_cast<double>(w2.m()) * w1.beta());
}

FockState apply(const WeylElement& w, const FockState& state) {
  const auto f = state.coeffs();
  std::vector<cplx> g(f.size() + w.m());
  for (std::size_t n = 0; n < f.size(); ++n)
    g[n + w.m()] = std::polar(1.0, w.beta() * static_cast<double>(n) + w.gamma()) * f[n];
  return FockState(std::move(g), state.norm_defect());
}

FockState apply_adjoint(const WeylElement& w, const FockState& state) {
  const auto f = state.coeffs();
  std::vector<cplx> g(f.size() > w.m() ? f.size() - w.m() : 1);
  for (std::size_t n = 0; n + w.m() < f.size(); ++n)
    g[n] = std::polar(1.0, -w.beta() * static_cast<double>(n) - w.gamma()) * f[n + w.m()];
  return FockState(std::move(g), state.norm_defect());
}

FockState shift(const FockState& state, std::size_t m) { return apply(WeylElement(m, 0.0, 0.0), state); }

double TransformationDiagnostics::max() const {
  return std::max({analytic_residual, phi_residual, inner_residual, boundary_residual});
}

TransformationDiagnostics transformation_check(const WeylElement& w, const FockState& state) {
  static constexpr std::array<cplx, 5> kSamples = {
      cplx{0.3, 0.0}, cplx{0.0, 0.5}, cplx{-0.4, 0.2}, cplx{0.1, -0.6}, cplx{0.45, 0.4}};

  const FockState g = apply(w, state);
  const cplx phase = std::polar(1.0, -w.gamma());
  const cplx rotation = std::polar(1.0, -w.beta());
  const auto m = static_cast<double>(w.m());

  FactorOptions options;
  options.grid_size = default_grid_size(g.truncation());
  const FactoredState fac_f = factorize(state, options);
  const FactoredState fac_g = factorize(g, options);

  TransformationDiagnostics d;
  for (const cplx& z : kSamples) {
    const cplx zr = z * rotation;
    const cplx zm = std::pow(z, m);
    d.analytic_residual =
        std::max(d.analytic_residual, std::abs(eval_Z(g, z) - phase * zm * eval_Z(state, zr)));
    d.phi_residual = std::max(d.phi_residual, std::abs(series::evaluate(fac_g.phi.phi, z) -
                                                       series::evaluate(fac_f.phi.phi, zr)));
    d.inner_residual =
        std::max(d.inner_residual, std::abs(series::evaluate(fac_g.inner_coeffs, z) -
                                            phase * zm * series::evaluate(fac_f.inner_coeffs, zr)));
  }

  const auto samples = boundary(g, options.grid_size);
  const auto taylor_f = state.taylor_coeffs();
  for (std::size_t j = 0; j < samples.grid_size; ++j) {
    const double theta = samples.theta[j];
    const cplx expected = std::polar(1.0, m * theta - w.gamma()) *
                          series::evaluate(taylor_f, std::polar(1.0, theta - w.beta()));
    d.boundary_residual = std::max(d.boundary_residual, std::abs(samples.values[j] - expected));
  }
  return d;
}

double eigenrelation_check(EigenFamily family, cplx label, const FockState& shifted, std::size_t m) {
  const auto psi = shifted.coeffs();
  double residual = 0.0;
  for (std::size_t n = 0; n + 1 < psi.size(); ++n) {
    cplx lhs;
    if (family == EigenFamily::su11_cs) {
      // (E_- psi)_n = psi_{n+1}; the projector removes psi_m from row m-1.
      lhs = psi[n + 1];
      if (m >= 1 && n == m - 1) lhs -= psi[m];
    } else {
      // (E_- (N - m) psi)_n = (n + 1 - m) psi_{n+1}
      lhs = (static_cast<double>(n + 1) - static_cast<double>(m)) * psi[n + 1];
    }
    residual = std::max(residual, std::abs(lhs - label * psi[n]));
  }
  return residual;
}

}  // namespace phasefact
