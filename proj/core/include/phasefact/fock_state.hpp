#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace phasefact {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultTruncation = 256;

/// Truncated Fock-space state: amplitudes f_0..f_{N-1} of sum_n f_n |n>.
///
/// `norm_defect` is the probability mass beyond the truncation,
/// 1 - sum_n |f_n|^2, when it is known analytically (zero for finite
/// superpositions of number states). Instances are immutable.
class FockState {
 public:
  /// Throws DomainError if `coeffs` is empty, the truncated norm exceeds
  /// 1 + 1e-12, or the defect is negative.
  explicit FockState(std::vector<cplx> coeffs, double norm_defect = 0.0);

  std::span<const cplx> coeffs() const { return coeffs_; }
  std::size_t truncation() const { return coeffs_.size(); }
  double norm_defect() const { return norm_defect_; }
  cplx operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : cplx{}; }

  /// sum_n |f_n|^2 over the stored coefficients.
  double truncated_norm2() const;

  /// Conjugated coefficients f_n^*, the Taylor coefficients of Z(f;z).
  std::vector<cplx> taylor_coeffs() const;

 private:
  std::vector<cplx> coeffs_;
  double norm_defect_;
};

/// Number state |m>.
FockState make_number(std::size_t m, std::size_t truncation = kDefaultTruncation);

/// SU(1,1) coherent state |z0> = (1-|z0|^2)^{1/2} sum z0^n |n>.
/// Throws IllConditionedError if |z0| > max_radius.
FockState make_su11_cs(cplx z0, std::size_t truncation = kDefaultTruncation,
                       double max_radius = 1.0 - 1e-6);

/// Barut-Girardello state |u0> = I0(2|u0|)^{-1/2} sum u0^n/n! |n>.
/// Throws TruncationError unless |u0|^N/N! < tail_bound.
FockState make_bg(cplx u0, std::size_t truncation = kDefaultTruncation, double tail_bound = 1e-14);

/// Blaschke state: f_0 = -z0^*, f_n = (1-|z0|^2) z0^{n-1}; its disk function
/// is the Blaschke factor (z - z0)/(1 - z0^* z).
FockState make_blaschke_state(cplx z0, std::size_t truncation = kDefaultTruncation);

/// Normalisation constant of the two-component superposition |z0> + e^{i tau}|-z0>.
double pi_superposition_norm(cplx z0, double tau);

/// |z0,tau> = Nrm^{-1/2}(|z0> + e^{i tau}|-z0>).
/// Throws DegenerateError when the superposition annihilates itself.
FockState make_pi_superposition(cplx z0, double tau, std::size_t truncation = kDefaultTruncation);

/// Linear combination sum_i a_i |psi_i>, renormalised to unit norm. Shorter
/// states are zero-padded. Coefficient phases are kept as they come out of
/// the combination. Throws DegenerateError for a zero-norm result.
FockState superpose(std::span<const FockState> states, std::span<const cplx> amplitudes);

/// P(n) = |f_n|^2.
std::vector<double> number_distribution(const FockState& state);

}  // namespace phasefact
