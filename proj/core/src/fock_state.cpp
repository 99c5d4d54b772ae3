#include "phasefact/fock_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "phasefact/errors.hpp"
#include "phasefact/special_functions.hpp"

namespace phasefact {

FockState::FockState(std::vector<cplx> coeffs, double norm_defect)
    : coeffs_(std::move(coeffs)), norm_defect_(norm_defect) {
  if (coeffs_.empty()) throw DomainError("FockState: truncation must be at least 1");
  if (!(norm_defect_ >= 0.0)) throw DomainError("FockState: norm defect must be non-negative");
  const double norm2 = truncated_norm2();
  if (!(norm2 <= 1.0 + 1e-12))
    throw DomainError("FockState: coefficient norm " + std::to_string(norm2) + " exceeds 1");
}

double FockState::truncated_norm2() const {
  double sum = 0.0;
  for (const cplx& c : coeffs_) sum += std::norm(c);
  return sum;
}

std::vector<cplx> FockState::taylor_coeffs() const {
  std::vector<cplx> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](cplx c) { return std::conj(c); });
  return out;
}

FockState make_number(std::size_t m, std::size_t truncation) {
  if (m >= truncation)
    throw TruncationError("make_number: |" + std::to_string(m) + "> needs truncation > " +
                          std::to_string(m));
  std::vector<cplx> f(truncation);
  f[m] = 1.0;
  return FockState(std::move(f));
}

FockState make_su11_cs(cplx z0, std::size_t truncation, double max_radius) {
  const double r = std::abs(z0);
  if (!(r <= max_radius))
    throw IllConditionedError("make_su11_cs: |z0| = " + std::to_string(r) +
                              " too close to the unit circle");
  if (truncation == 0) throw DomainError("make_su11_cs: truncation must be at least 1");
  std::vector<cplx> f(truncation);
  f[0] = std::sqrt(1.0 - r * r);
  for (std::size_t n = 1; n < truncation; ++n) f[n] = f[n - 1] * z0;
  const double defect = std::pow(r, 2.0 * static_cast<double>(truncation));
  return FockState(std::move(f), defect);
}

FockState make_bg(cplx u0, std::size_t truncation, double tail_bound) {
  if (truncation == 0) throw DomainError("make_bg: truncation must be at least 1");
  const double a = std::abs(u0);
  const double n = static_cast<double>(truncation);
  if (a > 0.0 && n * std::log(a) - std::lgamma(n + 1.0) >= std::log(tail_bound))
    throw TruncationError("make_bg: |u0|^N/N! exceeds the tail bound; increase the truncation");

  const double i0 = bessel_i0(2.0 * a);
  std::vector<cplx> f(truncation);
  f[0] = 1.0 / std::sqrt(i0);
  for (std::size_t k = 1; k < truncation; ++k) f[k] = f[k - 1] * u0 / static_cast<double>(k);

  // Tail mass sum_{k>=N} |u0|^{2k}/(k!)^2 / I0, summed directly.
  double defect = 0.0;
  if (a > 0.0) {
    double term = std::norm(f[truncation - 1]);
    for (std::size_t k = truncation; k < truncation + 10000; ++k) {
      term *= a * a / (static_cast<double>(k) * k);
      defect += term;
      if (term <= 1e-18 * defect || term == 0.0) break;
    }
  }
  return FockState(std::move(f), defect);
}

FockState make_blaschke_state(cplx z0, std::size_t truncation) {
  const double r = std::abs(z0);
  if (!(r < 1.0)) throw DomainError("make_blaschke_state: |z0| must be < 1");
  if (truncation == 0) throw DomainError("make_blaschke_state: truncation must be at least 1");
  std::vector<cplx> f(truncation);
  f[0] = -std::conj(z0);
  if (truncation > 1) f[1] = 1.0 - r * r;
  for (std::size_t n = 2; n < truncation; ++n) f[n] = f[n - 1] * z0;
  const double defect =
      truncation == 1 ? 1.0 - r * r : (1.0 - r * r) * std::pow(r, 2.0 * (truncation - 1.0));
  return FockState(std::move(f), defect);
}

double pi_superposition_norm(cplx z0, double tau) {
  const double r2 = std::norm(z0);
  return 2.0 * (1.0 + (1.0 - r2) / (1.0 + r2) * std::cos(tau));
}

FockState make_pi_superposition(cplx z0, double tau, std::size_t truncation) {
  const double r = std::abs(z0);
  if (!(r < 1.0)) throw DomainError("make_pi_superposition: |z0| must be < 1");
  if (truncation == 0) throw DomainError("make_pi_superposition: truncation must be at least 1");
  const double nrm = pi_superposition_norm(z0, tau);
  if (!(nrm > 1e-12)) throw DegenerateError("make_pi_superposition: superposition has zero norm");

  const double r2 = r * r;
  const double scale = std::sqrt((1.0 - r2) / nrm);
  const cplx phase = std::polar(1.0, tau);
  std::vector<cplx> f(truncation);
  cplx power = 1.0;
  for (std::size_t n = 0; n < truncation; ++n) {
    const cplx sign = (n % 2 == 0) ? phase : -phase;
    f[n] = scale * (1.0 + sign) * power;
    power *= z0;
  }
  // sum_{n>=N} |1 + e^{i tau}(-1)^n|^2 r^{2n} = 2 r^{2N}/(1-r^2) + 2 cos(tau) (-1)^N r^{2N}/(1+r^2)
  const double r2n = std::pow(r2, static_cast<double>(truncation));
  const double parity = truncation % 2 == 0 ? 1.0 : -1.0;
  const double tail = 2.0 * r2n / (1.0 - r2) + 2.0 * std::cos(tau) * parity * r2n / (1.0 + r2);
  const double defect = std::max(0.0, (1.0 - r2) / nrm * tail);
  return FockState(std::move(f), defect);
}

FockState superpose(std::span<const FockState> states, std::span<const cplx> amplitudes) {
  if (states.empty() || states.size() != amplitudes.size())
    throw DomainError("superpose: need one amplitude per state");
  std::size_t n = 0;
  for (const auto& s : states) n = std::max(n, s.truncation());

  std::vector<cplx> g(n);
  double tail_bound = 0.0;  // (sum_i |a_i| sqrt(defect_i))^2 bounds the dropped mass
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto c = states[i].coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) g[k] += amplitudes[i] * c[k];
    tail_bound += std::abs(amplitudes[i]) * std::sqrt(states[i].norm_defect());
  }
  tail_bound *= tail_bound;

  double norm2 = 0.0;
  for (const cplx& c : g) norm2 += std::norm(c);
  if (!(norm2 > 1e-12)) throw DegenerateError("superpose: combination has zero norm");

  const double total = norm2 + tail_bound;
  const double scale = 1.0 / std::sqrt(total);
  for (cplx& c : g) c *= scale;
  return FockState(std::move(g), tail_bound / total);
}

std::vector<double> number_distribution(const FockState& state) {
  std::vector<double> p(state.truncation());
  const auto c = state.coeffs();
  for (std::size_t n = 0; n < p.size(); ++n) p[n] = std::norm(c[n]);
  return p;
}

}  // namespace phasefact
