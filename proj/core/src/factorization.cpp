#include "phasefact/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "phasefact/errors.hpp"
#include "phasefact/roots.hpp"
#include "phasefact/series.hpp"

namespace phasefact {
namespace {

// ln|e^{i theta_j} - zeta| summed over zeta, for each grid angle.
std::vector<double> factor_log_modulus(const std::vector<double>& theta,
                                       std::span<const cplx> zeros) {
  std::vector<double> out(theta.size(), 0.0);
  if (zeros.empty()) return out;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const cplx e = std::polar(1.0, theta[j]);
    double acc = 0.0;
    for (const cplx& zeta : zeros) acc += std::log(std::abs(e - zeta));
    out[j] = acc;
  }
  return out;
}

// Mean over the circle of ln|e^{i theta} - zeta|.
double factor_log_mean(cplx zeta) { return std::max(0.0, std::log(std::abs(zeta))); }

// Mean of ln|Theta| with the near-circle factors integrated exactly.
double mean_log_modulus(const BoundarySamples& samples, std::span<const cplx> near_circle_zeros) {
  const auto sub = factor_log_modulus(samples.theta, near_circle_zeros);
  double acc = 0.0;
  for (std::size_t j = 0; j < samples.grid_size; ++j) acc += samples.log_abs[j] - sub[j];
  acc /= static_cast<double>(samples.grid_size);
  for (const cplx& zeta : near_circle_zeros) acc += factor_log_mean(zeta);
  return acc;
}

double clamp_defect(double d) { return (d < 0.0 && d > -1e-8) ? 0.0 : d; }

std::vector<cplx> select_near_circle(std::span<const cplx> roots, std::size_t grid_size) {
  const double band = near_circle_band(grid_size);
  std::vector<cplx> out;
  for (const cplx& z : roots)
    if (z != cplx{} && std::abs(std::log(std::abs(z))) < band) out.push_back(z);
  return out;
}

std::vector<BlaschkeZero> cluster(std::vector<cplx> roots, double radius) {
  std::vector<BlaschkeZero> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    cplx sum = roots[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) < radius) {
        used[j] = true;
        sum += roots[j];
        ++count;
      }
    }
    out.push_back({sum / static_cast<double>(count), count});
  }
  std::sort(out.begin(), out.end(), [](const BlaschkeZero& a, const BlaschkeZero& b) {
    return std::abs(a.gamma) < std::abs(b.gamma);
  });
  return out;
}

ZeroSet split_zeros(std::span<const cplx> roots, double edge_margin, double cluster_radius) {
  ZeroSet set;
  std::vector<cplx> inside;
  for (const cplx& z : roots) {
    if (z == cplx{}) {
      ++set.origin_order;
    } else if (std::abs(z) < 1.0) {
      inside.push_back(z);
    }
  }
  for (const auto& zero : cluster(std::move(inside), cluster_radius)) {
    if (std::abs(zero.gamma) < 1.0 - edge_margin) {
      set.zeros.push_back(zero);
    } else {
      set.edge_zeros.push_back(zero);
    }
  }
  return set;
}

}  // namespace

double near_circle_band(std::size_t grid_size) {
  // (1 - band)^{M/2} ~ 1e-15
  return std::min(0.5, 70.0 / static_cast<double>(grid_size));
}

PhiSeries compute_phi(const BoundarySamples& samples, std::size_t length) {
  return compute_phi(samples, length, {});
}

PhiSeries compute_phi(const BoundarySamples& samples, std::size_t length,
                      std::span<const cplx> near_circle_zeros) {
  const std::size_t m = samples.grid_size;
  if (length > m / 2)
    throw DomainError("compute_phi: series length " + std::to_string(length) + " exceeds M/2");

  const auto sub = factor_log_modulus(samples.theta, near_circle_zeros);
  std::vector<cplx> work(m);
  for (std::size_t j = 0; j < m; ++j) work[j] = samples.log_abs[j] - sub[j];
  detail::fft_forward(work);

  // c_k = (1/M) sum_j L_j e^{-i k theta_j},  theta_j = offset + 2 pi j/M
  const double offset = -std::numbers::pi + std::numbers::pi / static_cast<double>(m);
  PhiSeries out;
  out.grid_size = m;
  out.phi.resize(length);
  for (std::size_t k = 0; k < length; ++k) {
    const cplx c = work[k] * std::polar(1.0 / static_cast<double>(m), -offset * static_cast<double>(k));
    out.phi[k] = k == 0 ? cplx{c.real(), 0.0} : 2.0 * c;
  }

  // ln|e^{i theta} - zeta| is the boundary real part of
  //   ln|zeta| + ln(1 - z/zeta)   for |zeta| >= 1,
  //   ln(1 - zeta^* z)            for |zeta| <  1.
  for (const cplx& zeta : near_circle_zeros) {
    if (length == 0) break;
    const bool outside = std::abs(zeta) >= 1.0;
    const cplx ratio = outside ? 1.0 / zeta : std::conj(zeta);
    out.phi[0] += factor_log_mean(zeta);
    cplx power = 1.0;
    for (std::size_t k = 1; k < length; ++k) {
      power *= ratio;
      out.phi[k] -= power / static_cast<double>(k);
    }
  }
  return out;
}

std::vector<cplx> outer_part(const PhiSeries& phi, std::size_t length) {
  return series::exp(phi.phi, length);
}

InnerPart inner_part(const FockState& state, std::span<const cplx> outer, std::size_t grid_size) {
  if (outer.empty() || outer[0] == cplx{})
    throw IllConditionedError("inner_part: outer series must have a nonzero constant term");
  const auto taylor = state.taylor_coeffs();
  InnerPart out;
  out.coeffs = series::divide(taylor, outer, outer.size());

  std::size_t m = std::max<std::size_t>(grid_size, 2);
  while (m < out.coeffs.size()) m *= 2;
  const auto samples = boundary_of_series(out.coeffs, m);
  for (const cplx& v : samples.values)
    out.boundary_deviation = std::max(out.boundary_deviation, std::abs(std::abs(v) - 1.0));
  return out;
}

double outer_defect(const FockState& state, const BoundarySamples& samples) {
  const auto taylor = state.taylor_coeffs();
  const auto roots = polynomial_roots(taylor);
  const auto near = select_near_circle(roots, samples.grid_size);
  return outer_defect(state, samples, near);
}

double outer_defect(const FockState& state, const BoundarySamples& samples,
                    std::span<const cplx> near_circle_zeros) {
  const cplx f0 = state[0];
  if (f0 == cplx{}) return kInfiniteDefect;
  return clamp_defect(mean_log_modulus(samples, near_circle_zeros) - std::log(std::abs(f0)));
}

ZeroSet blaschke_zeros(const FockState& state, double edge_margin, double cluster_radius) {
  const auto taylor = state.taylor_coeffs();
  if (std::all_of(taylor.begin(), taylor.end(), [](cplx c) { return c == cplx{}; }))
    throw DegenerateError("blaschke_zeros: coefficient vector is identically zero");
  return split_zeros(polynomial_roots(taylor), edge_margin, cluster_radius);
}

std::vector<cplx> blaschke_product(std::span<const BlaschkeZero> zeros, std::size_t length) {
  std::vector<cplx> out(length);
  if (length == 0) return out;
  out[0] = 1.0;
  for (const auto& zero : zeros) {
    const double r = std::abs(zero.gamma);
    if (r == 0.0)
      throw DomainError("blaschke_product: gamma = 0 must be carried as the monomial z^p");
    if (!(r < 1.0)) throw DomainError("blaschke_product: |gamma| must be < 1");
    // (gamma^*/|gamma|)(gamma - z)/(1 - gamma^* z):
    //   a_0 = |gamma|, a_n = (gamma^*/|gamma|) gamma^{*(n-1)} (|gamma|^2 - 1)
    std::vector<cplx> factor(length);
    const cplx g_conj = std::conj(zero.gamma);
    factor[0] = r;
    cplx power = g_conj / r * (r * r - 1.0);
    for (std::size_t n = 1; n < length; ++n) {
      factor[n] = power;
      power *= g_conj;
    }
    for (int p = 0; p < zero.multiplicity; ++p) out = series::multiply(out, factor, length);
  }
  return out;
}

FactoredState factorize(const FockState& state, const FactorOptions& options) {
  const std::size_t n = state.truncation();
  const std::size_t m = options.grid_size != 0 ? options.grid_size : default_grid_size(n);
  if (!is_power_of_two(m)) throw DomainError("factorize: grid size must be a power of two");
  if (m < 2 * n) throw AliasingError("factorize: grid size below 2N");
  const std::size_t length = options.series_length != 0 ? options.series_length : m / 2;
  if (length < n || length > m / 2)
    throw DomainError("factorize: series length must lie in [N, M/2]");

  const auto taylor = state.taylor_coeffs();
  if (std::all_of(taylor.begin(), taylor.end(), [](cplx c) { return c == cplx{}; }))
    throw DegenerateError("factorize: coefficient vector is identically zero");

  const auto samples = boundary(state, m);
  const auto roots = polynomial_roots(taylor);
  const auto near = select_near_circle(roots, m);

  FactoredState out;
  out.truncation = n;
  out.grid_size = m;
  out.phi = compute_phi(samples, length, near);
  out.outer_coeffs = outer_part(out.phi, length);
  auto inner = inner_part(state, out.outer_coeffs, m);
  out.inner_coeffs = std::move(inner.coeffs);
  out.inner_boundary_deviation = inner.boundary_deviation;
  out.zeros = split_zeros(roots, options.edge_margin, options.cluster_radius);

  std::size_t lead = 0;
  while (taylor[lead] == cplx{}) ++lead;
  out.reduced_outer_defect = clamp_defect(out.phi.phi[0].real() - std::log(std::abs(taylor[lead])));
  out.outer_defect = lead == 0 ? out.reduced_outer_defect : kInfiniteDefect;

  for (const auto* list : {&out.zeros.zeros, &out.zeros.edge_zeros})
    for (const auto& z : *list) out.blaschke_defect -= z.multiplicity * std::log(std::abs(z.gamma));

  const auto product = series::multiply(out.outer_coeffs, out.inner_coeffs, length);
  for (std::size_t k = 0; k < length; ++k) {
    const cplx target = k < taylor.size() ? taylor[k] : cplx{};
    out.reconstruction_residual = std::max(out.reconstruction_residual, std::abs(product[k] - target));
  }

  const auto refined = compute_phi(boundary(state, 2 * m), length, near);
  for (std::size_t k = 0; k < length; ++k)
    out.refinement_delta = std::max(out.refinement_delta, std::abs(refined.phi[k] - out.phi.phi[k]));

  // Inner part divided by its Blaschke product must be a constant: any
  // excess defect signals a singular inner factor (or unresolved zeros).
  const double excess = out.reduced_outer_defect - out.blaschke_defect;
  out.singular_suspected = excess > options.outer_tol;
  out.ill_conditioned =
      excess < -options.outer_tol || out.inner_boundary_deviation > options.inner_tol;
  return out;
}

}  // namespace phasefact
