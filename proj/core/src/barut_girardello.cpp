#include "phasefact/barut_girardello.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "phasefact/errors.hpp"
#include "phasefact/quadrature.hpp"
#include "phasefact/series.hpp"
#include "phasefact/special_functions.hpp"

namespace phasefact {
namespace {

// Largest R with tail * R^N/N! * e^R <= 1e-10 (tail bounds |coefficient| beyond N).
double validated_radius(std::size_t n, double tail) {
  if (tail <= 0.0) return std::numeric_limits<double>::infinity();
  const auto bound = [&](double r) {
    return std::log(tail) + static_cast<double>(n) * std::log(r) - std::lgamma(n + 1.0) + r;
  };
  const double target = std::log(1e-10);
  double lo = 0.0;
  double hi = 1.0;
  while (bound(hi) < target && hi < 1e6) hi *= 2.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (bound(mid) < target ? lo : hi) = mid;
  }
  return lo;
}

// int_a^b of a complex integrand with n-point Gauss-Legendre.
template <typename F>
cplx gauss_panel(F&& f, double a, double b, std::size_t n) {
  const auto& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  cplx acc{};
  for (std::size_t i = 0; i < n; ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * acc;
}

// Bisects until the two halves agree with the whole to 1e-14 relative, or to
// `floor` absolute (the scale of the full integral, so tiny tails stop early).
template <typename F>
cplx adaptive_panel(F&& f, double a, double b, cplx whole, double floor, int depth) {
  const double mid = 0.5 * (a + b);
  const cplx left = gauss_panel(f, a, mid, 20);
  const cplx right = gauss_panel(f, mid, b, 20);
  const cplx refined = left + right;
  if (depth <= 0 || std::abs(refined - whole) <= std::max(1e-14 * std::abs(refined), floor))
    return refined;
  return adaptive_panel(f, a, mid, left, floor, depth - 1) +
         adaptive_panel(f, mid, b, right, floor, depth - 1);
}

}  // namespace

cplx BGFunction::operator()(cplx u) const { return series::evaluate(smooth, u); }

BGFunction bg_function(const FockState& state) {
  const auto f = state.coeffs();
  BGFunction out;
  out.smooth.resize(f.size());
  double inv_factorial = 1.0;
  for (std::size_t n = 0; n < f.size(); ++n) {
    if (n > 0) inv_factorial /= static_cast<double>(n);
    out.smooth[n] = std::conj(f[n]) * inv_factorial;
  }
  out.radius_hint = validated_radius(f.size(), std::sqrt(state.norm_defect()));
  return out;
}

cplx laplace_to_disk(const BGFunction& u_fn, cplx z) {
  if (!(z.real() > 0.0)) throw DomainError("laplace_to_disk: need Re z > 0");
  if (!(std::abs(z) < 1.0)) throw DomainError("laplace_to_disk: need |z| < 1");

  const cplx s = 1.0 / z;
  const auto integrand = [&](double u) { return u_fn(u) * std::exp(-s * u); };

  // Panels no wider than one decay length or half an oscillation.
  double width = std::min(2.0, 1.0 / s.real());
  if (s.imag() != 0.0) width = std::min(width, std::numbers::pi / std::abs(s.imag()));

  const double min_extent = 5.0 / s.real();
  cplx acc{};
  double largest = 0.0;
  int quiet = 0;
  double a = 0.0;
  for (int panel = 0; panel < 200000; ++panel) {
    const double b = a + width;
    const cplx coarse = gauss_panel(integrand, a, b, 20);
    const double floor = 1e-16 * std::max({largest, std::abs(acc), std::abs(coarse)});
    const cplx piece = adaptive_panel(integrand, a, b, coarse, floor, 12);
    acc += piece;
    const double size = std::abs(piece);
    largest = std::max(largest, size);
    quiet = (size <= 1e-18 * largest) ? quiet + 1 : 0;
    a = b;
    if (a > min_extent && quiet >= 3) return (acc + 0.5 * u_fn.atom) / z;
  }
  throw IllConditionedError("laplace_to_disk: integral did not converge");
}

BGFactorParts bg_factor_parts(const FactoredState& factored) {
  BGFactorParts parts;
  const auto& c = factored.inner_coeffs;
  const auto& b = factored.outer_coeffs;

  parts.inner.smooth.resize(c.size());
  double inv_factorial = 1.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n > 0) inv_factorial /= static_cast<double>(n);
    parts.inner.smooth[n] = c[n] * inv_factorial;
  }

  if (!b.empty()) {
    parts.outer.atom = 2.0 * b[0];
    parts.outer.smooth.resize(b.size() - 1);
    inv_factorial = 1.0;
    for (std::size_t n = 1; n < b.size(); ++n) {
      if (n > 1) inv_factorial /= static_cast<double>(n - 1);
      parts.outer.smooth[n - 1] = b[n] * inv_factorial;
    }
  }
  // Beyond this radius the dropped series terms could exceed 1e-10.
  parts.inner.radius_hint = validated_radius(c.size(), 1.0);
  parts.outer.radius_hint = validated_radius(b.size() > 0 ? b.size() - 1 : 0, 1.0);
  return parts;
}

cplx bg_convolve(const BGFunction& u_in, const BGFunction& u_out, cplx u) {
  const auto& rule = gauss_legendre(64);
  cplx acc{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = 0.5 * (rule.nodes[i] + 1.0);
    acc += 0.5 * rule.weights[i] * u_in(t * u) * u_out((1.0 - t) * u);
  }
  acc *= u;
  acc += 0.5 * u_out.atom * u_in(u);
  acc += 0.5 * u_in.atom * u_out(u);
  return acc;
}

bool within_validated_radius(const BGFunction& u_in, const BGFunction& u_out, cplx u) {
  return std::abs(u) <= std::min(u_in.radius_hint, u_out.radius_hint);
}

cplx bg_shifted(const FockState& state, std::size_t m, cplx u, ShiftRoute route) {
  const BGFunction fn = bg_function(state);
  const auto& rule = gauss_legendre(64);
  cplx acc{};

  if (route == ShiftRoute::integral_of_u) {
    if (m == 0) throw DomainError("bg_shifted: the U-integral route needs m >= 1");
    // u^m/(m-1)! int_0^1 (1-t)^{m-1} U(t u) dt
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = 0.5 * (rule.nodes[i] + 1.0);
      acc += 0.5 * rule.weights[i] * std::pow(1.0 - t, static_cast<double>(m - 1)) * fn(t * u);
    }
    return acc * std::pow(u, static_cast<double>(m)) / std::tgamma(static_cast<double>(m));
  }

  // U_out = 2 f_0^* delta(u) + dU/du; the delta sits on the lower endpoint.
  std::vector<cplx> derivative(fn.smooth.size() > 1 ? fn.smooth.size() - 1 : 0);
  for (std::size_t n = 1; n < fn.smooth.size(); ++n)
    derivative[n - 1] = static_cast<double>(n) * fn.smooth[n];
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = 0.5 * (rule.nodes[i] + 1.0);
    acc += 0.5 * rule.weights[i] * std::pow(1.0 - t, static_cast<double>(m)) *
           series::evaluate(derivative, t * u);
  }
  const double m_factorial = std::tgamma(static_cast<double>(m) + 1.0);
  const cplx um = std::pow(u, static_cast<double>(m));
  return (acc * u * um + std::conj(state[0]) * um) / m_factorial;
}

double bg_measure_weight(cplx u) {
  const double a = std::abs(u);
  if (a == 0.0) throw DomainError("bg_measure_weight: K0 is singular at u = 0");
  return 2.0 / std::numbers::pi * bessel_k0(2.0 * a) * bessel_i0(2.0 * a);
}

std::vector<std::vector<cplx>> bg_identity_resolution(std::size_t n_max,
                                                      std::size_t angular_points) {
  // Radial panels: geometric refinement towards the logarithmic singularity
  // of K0 at the origin, then unit panels out to where K0(2 rho) rho^{2n+1}
  // is negligible.
  std::vector<double> edges = {0.0};
  for (double e = 1e-8; e < 1.0; e *= 4.0) edges.push_back(e);
  const double reach = 40.0 + 2.0 * static_cast<double>(n_max);
  for (double e = 1.0; e <= reach; e += 1.0) edges.push_back(e);

  const auto& rule = gauss_legendre(32);
  std::vector<double> rho;
  std::vector<double> weight;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      rho.push_back(mid + half * rule.nodes[i]);
      weight.push_back(half * rule.weights[i]);
    }
  }

  std::vector<double> measure(rho.size());
  std::vector<double> i0(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    measure[i] = bg_measure_weight(rho[i]);
    i0[i] = bessel_i0(2.0 * rho[i]);
  }

  std::vector<double> log_factorial(n_max + 1, 0.0);
  for (std::size_t n = 1; n <= n_max; ++n) log_factorial[n] = log_factorial[n - 1] + std::log(n);

  std::vector<std::vector<cplx>> out(n_max + 1, std::vector<cplx>(n_max + 1));
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(angular_points);
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (std::size_t m = 0; m <= n_max; ++m) {
      // Angular trapezoid of e^{i(n-m)phi}.
      cplx angular{};
      for (std::size_t a = 0; a < angular_points; ++a)
        angular += std::polar(dphi, (static_cast<double>(n) - static_cast<double>(m)) * a * dphi);
      if (std::abs(angular) < 1e-12) continue;

      double radial = 0.0;
      for (std::size_t i = 0; i < rho.size(); ++i) {
        const double r = rho[i];
        // <n|u><u|m> modulus: rho^{n+m} / (n! m! I0(2 rho))
        const double overlap =
            std::exp(static_cast<double>(n + m) * std::log(r) - log_factorial[n] - log_factorial[m]) /
            i0[i];
        radial += weight[i] * measure[i] * overlap * r;
      }
      out[n][m] = radial * angular;
    }
  }
  return out;
}

}  // namespace phasefact
