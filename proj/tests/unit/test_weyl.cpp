#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phasefact/disk_analytic.hpp"
#include "phasefact/weyl.hpp"

using namespace phasefact;

namespace {

constexpr double kPi = std::numbers::pi;

double coeff_diff(const FockState& a, const FockState& b) {
  const std::size_t n = std::max(a.truncation(), b.truncation());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

void expect_same_element(const WeylElement& a, const WeylElement& b, double tol) {
  EXPECT_EQ(a.m(), b.m());
  EXPECT_NEAR(canonical_angle(a.beta() - b.beta()), 0.0, tol);
  EXPECT_NEAR(canonical_angle(a.gamma() - b.gamma()), 0.0, tol);
}

FockState random_state(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<cplx> c(n);
  double norm = 0.0;
  for (auto& x : c) {
    x = {g(rng), g(rng)};
    norm += std::norm(x);
  }
  for (auto& x : c) x /= std::sqrt(norm);
  return FockState(c);
}

}  // namespace

TEST(CanonicalAngle, RangeIsHalfOpen) {
  EXPECT_DOUBLE_EQ(canonical_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(canonical_angle(-kPi), kPi);
  EXPECT_NEAR(canonical_angle(3 * kPi), kPi, 1e-15);
  EXPECT_NEAR(canonical_angle(2 * kPi + 0.25), 0.25, 1e-15);
  EXPECT_NEAR(canonical_angle(-0.5), -0.5, 0.0);
}

TEST(Compose, IdentityIsNeutral) {
  const WeylElement w(3, 1.2, -0.7);
  expect_same_element(compose(WeylElement::identity(), w), w, 0.0);
  expect_same_element(compose(w, WeylElement::identity()), w, 0.0);
}

TEST(Compose, PhaseCorrectionFromSecondShift) {
  const WeylElement w = compose(WeylElement(1, kPi / 2, 0.0), WeylElement(2, 0.0, 0.0));
  EXPECT_EQ(w.m(), 3u);
  EXPECT_NEAR(w.beta(), kPi / 2, 1e-15);
  EXPECT_NEAR(w.gamma(), kPi, 1e-15);
}

TEST(Compose, AssociativeOnRandomTriples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> mdist(0, 5);
  std::uniform_real_distribution<double> adist(-kPi, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    WeylElement w[3];
    for (auto& x : w) x = WeylElement(mdist(rng), adist(rng), adist(rng));
    expect_same_element(compose(compose(w[0], w[1]), w[2]), compose(w[0], compose(w[1], w[2])),
                        1e-12);
  }
}

TEST(Compose, MatchesSequentialApplication) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> mdist(0, 4);
  std::uniform_real_distribution<double> adist(-kPi, kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const WeylElement w1(mdist(rng), adist(rng), adist(rng));
    const WeylElement w2(mdist(rng), adist(rng), adist(rng));
    const FockState f = random_state(rng, 12);
    EXPECT_LT(coeff_diff(apply(compose(w1, w2), f), apply(w1, apply(w2, f))), 1e-12);
  }
}

TEST(Apply, ShiftsNumberStates) {
  const FockState g = apply(WeylElement(3, 0.0, 0.0), make_number(2, 8));
  EXPECT_EQ(g.truncation(), 11u);
  EXPECT_LT(coeff_diff(g, make_number(5, 11)), 1e-15);
}

TEST(Apply, RotationMapsCoherentStateToRotatedLabel) {
  const cplx z0{0.3, 0.4};
  const double beta = 0.9;
  const FockState g = apply(WeylElement(0, beta, 0.0), make_su11_cs(z0, 64));
  EXPECT_LT(coeff_diff(g, make_su11_cs(z0 * std::polar(1.0, beta), 64)), 1e-15);
}

TEST(Apply, GlobalPhaseLeavesPhaseDistribution) {
  const FockState f = make_su11_cs({0.5, -0.2}, 64);
  const FockState g = apply(WeylElement(0, 0.0, 1.3), f);
  for (std::size_t n = 0; n < 64; ++n) EXPECT_NEAR(std::abs(g[n] - std::polar(1.0, 1.3) * f[n]), 0.0, 1e-15);
  const auto pf = phase_distribution(f, 256);
  const auto pg = phase_distribution(g, 256);
  for (std::size_t j = 0; j < pf.size(); ++j) EXPECT_NEAR(pf[j], pg[j], 1e-14);
}

TEST(Apply, IsometryAndNormDefect) {
  const FockState f = make_bg({1.0, 0.5}, 40);
  const FockState g = apply(WeylElement(4, 0.3, -1.1), f);
  EXPECT_NEAR(g.truncated_norm2(), f.truncated_norm2(), 1e-15);
  EXPECT_EQ(g.norm_defect(), f.norm_defect());
}

TEST(Apply, AdjointIsLeftInverseOnly) {
  const FockState f = make_su11_cs({0.4, 0.1}, 32);
  const WeylElement w(2, 0.6, 0.2);
  EXPECT_LT(coeff_diff(apply_adjoint(w, apply(w, f)), f), 1e-15);

  // The reverse order annihilates the first m coefficients.
  const FockState back = apply(w, apply_adjoint(w, f));
  EXPECT_EQ(back[0], cplx{});
  EXPECT_EQ(back[1], cplx{});
  EXPECT_LT(back.truncated_norm2(), f.truncated_norm2() - 0.1);
}

TEST(Shift, ShiftedCoherentState) {
  const double z0 = 0.5;
  const FockState g = shift(make_su11_cs(z0, 40), 1);
  EXPECT_EQ(g[0], cplx{});
  for (std::size_t n = 1; n < 41; ++n)
    EXPECT_NEAR(std::abs(g[n] - std::sqrt(1 - z0 * z0) * std::pow(z0, n - 1.0)), 0.0, 1e-16);
}

TEST(Shift, ZeroIsIdentity) {
  const FockState f = make_blaschke_state({0.2, 0.3}, 16);
  EXPECT_EQ(coeff_diff(shift(f, 0), f), 0.0);
}

TEST(Shift, NumberDistributionShifts) {
  const FockState f = make_bg({0.8, 0.0}, 30);
  const auto p = number_distribution(f);
  const auto q = number_distribution(shift(f, 3));
  ASSERT_EQ(q.size(), p.size() + 3);
  for (std::size_t n = 0; n < 3; ++n) EXPECT_EQ(q[n], 0.0);
  for (std::size_t n = 3; n < q.size(); ++n) EXPECT_EQ(q[n], p[n - 3]);
}

TEST(Shift, PhaseDistributionInvariant) {
  const FockState f = make_pi_superposition({0.5, 0.0}, kPi / 2, 64);
  const auto p = phase_distribution(f, 512);
  for (std::size_t m : {1u, 2u, 5u}) {
    const auto q = phase_distribution(shift(f, m), 512);
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_NEAR(p[j], q[j], 1e-10);
  }
}

TEST(TransformationCheck, PureShiftScalesAnalyticFunction) {
  const FockState f = make_su11_cs(0.5, 64);
  const FockState g = shift(f, 2);
  EXPECT_NEAR(std::abs(eval_Z(g, 0.3) - 0.09 * eval_Z(f, 0.3)), 0.0, 1e-15);
  EXPECT_LT(transformation_check(WeylElement(2, 0.0, 0.0), f).max(), 1e-10);
}

TEST(TransformationCheck, RotatedShiftOfBGState) {
  const auto d = transformation_check(WeylElement(1, kPi / 3, 0.0), make_bg(1.0, 40));
  EXPECT_LT(d.phi_residual, 1e-10);
  EXPECT_LT(d.max(), 1e-10);
}

TEST(TransformationCheck, IdentityGivesZero) {
  const auto d = transformation_check(WeylElement::identity(), make_blaschke_state({0.3, -0.4}, 16));
  EXPECT_LT(d.max(), 1e-15);
}

TEST(TransformationCheck, InnerLawForBlaschkeState) {
  const auto d = transformation_check(WeylElement(2, 0.7, -0.4), make_blaschke_state({0.5, 0.2}, 64));
  EXPECT_LT(d.inner_residual, 1e-8);
  EXPECT_LT(d.max(), 1e-8);
}

TEST(Eigenrelation, ShiftedCoherentState) {
  const cplx z0 = 0.5;
  EXPECT_LT(eigenrelation_check(EigenFamily::su11_cs, z0, shift(make_su11_cs(z0, 64), 2), 2), 1e-12);
}

TEST(Eigenrelation, ShiftedBGState) {
  const cplx u0 = 1.0;
  EXPECT_LT(eigenrelation_check(EigenFamily::bg, u0, shift(make_bg(u0, 40), 3), 3), 1e-12);
}

TEST(Eigenrelation, UnshiftedStatesObeyPlainEigenrelations) {
  const cplx z0{0.3, -0.6};
  const cplx u0{1.2, 0.4};
  EXPECT_LT(eigenrelation_check(EigenFamily::su11_cs, z0, make_su11_cs(z0, 64), 0), 1e-12);
  EXPECT_LT(eigenrelation_check(EigenFamily::bg, u0, make_bg(u0, 40), 0), 1e-12);
}

TEST(Eigenrelation, WrongLabelIsDetected) {
  EXPECT_GT(eigenrelation_check(EigenFamily::su11_cs, 0.4, shift(make_su11_cs(0.5, 64), 2), 2), 1e-3);
  EXPECT_GT(eigenrelation_check(EigenFamily::bg, 1.0, shift(make_bg(1.0, 40), 3), 2), 1e-3);
}
