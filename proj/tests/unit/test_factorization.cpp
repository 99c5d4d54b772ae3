#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "phasefact/errors.hpp"
#include "phasefact/factorization.hpp"
#include "phasefact/series.hpp"
#include "phasefact/special_functions.hpp"

using namespace phasefact;

namespace {

constexpr double kPi = std::numbers::pi;

FockState from_taylor(std::span<const cplx> taylor) {
  std::vector<cplx> c(taylor.size());
  double norm = 0.0;
  for (std::size_t n = 0; n < c.size(); ++n) {
    c[n] = std::conj(taylor[n]);
    norm += std::norm(c[n]);
  }
  for (auto& x : c) x /= std::sqrt(norm);
  return FockState(c);
}

FockState number_out(std::size_t m, std::size_t n) {
  std::vector<cplx> c(n);
  c[0] = c[m] = 1.0 / std::numbers::sqrt2;
  return FockState(c);
}

// Phi(z) by trapezoid quadrature of (1/2pi) int (2C - 1) ln|Theta| on a fine grid.
cplx phi_by_quadrature(const FockState& s, cplx z, std::size_t points) {
  const auto taylor = s.taylor_coeffs();
  const double r = std::abs(z), arg = std::arg(z);
  cplx acc{};
  for (std::size_t j = 0; j < points; ++j) {
    const double t = -kPi + (2.0 * j + 1.0) * kPi / points;
    const double log_abs = std::log(std::abs(series::evaluate(taylor, std::polar(1.0, t))));
    acc += (2.0 * cauchy_kernel(r, arg - t) - 1.0) * log_abs;
  }
  return acc / static_cast<double>(points);
}

double max_diff(std::span<const cplx> a, std::span<const cplx> b, std::size_t n) {
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx x = k < a.size() ? a[k] : cplx{};
    const cplx y = k < b.size() ? b[k] : cplx{};
    worst = std::max(worst, std::abs(x - y));
  }
  return worst;
}

}  // namespace

TEST(ComputePhi, VacuumAndNumberStatesVanish) {
  for (std::size_t m : {0u, 1u, 6u}) {
    const auto phi = compute_phi(boundary(make_number(m, 16), 64), 32);
    ASSERT_EQ(phi.phi.size(), 32u);
    for (const cplx& c : phi.phi) EXPECT_NEAR(std::abs(c), 0.0, 1e-14);
  }
}

TEST(ComputePhi, CoherentStateLogSeries) {
  const auto phi = compute_phi(boundary(make_su11_cs(0.5, 64), 256), 128);
  EXPECT_NEAR(phi.phi[0].real(), 0.5 * std::log(0.75), 1e-14);
  EXPECT_NEAR(std::abs(phi.phi[1] - 0.5), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(phi.phi[2] - 0.125), 0.0, 1e-14);

  // ln Z = (1/2) ln(1 - r^2) + sum (z0^* z)^k / k for complex z0.
  const cplx z0 = std::polar(0.7, -2.0);
  const auto p2 = compute_phi(boundary(make_su11_cs(z0, 128), 512), 256);
  EXPECT_NEAR(std::abs(p2.phi[0].imag()), 0.0, 1e-10);
  for (std::size_t k = 1; k < 40; ++k)
    EXPECT_NEAR(std::abs(p2.phi[k] - std::pow(std::conj(z0), static_cast<double>(k)) / static_cast<double>(k)), 0.0,
                1e-12);
}

TEST(ComputePhi, AgreesWithKernelQuadrature) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> rad(0.0, 0.8), ang(-kPi, kPi);
  const FockState s = make_bg(std::polar(1.2, 0.5), 64);
  const auto phi = compute_phi(boundary(s, 512), 256);
  for (int i = 0; i < 20; ++i) {
    const cplx z = std::polar(rad(rng), ang(rng));
    EXPECT_NEAR(std::abs(series::evaluate(phi.phi, z) - phi_by_quadrature(s, z, 4096)), 0.0, 1e-6);
  }
}

TEST(ComputePhi, LengthLimited) {
  EXPECT_THROW(compute_phi(boundary(make_number(0, 4), 16), 9), DomainError);
}

TEST(OuterPart, Catalog) {
  PhiSeries zero{std::vector<cplx>(8), 16};
  const auto one = outer_part(zero, 8);
  EXPECT_EQ(one[0], cplx(1.0));
  for (std::size_t k = 1; k < 8; ++k) EXPECT_EQ(one[k], cplx(0.0));

  const auto cs = outer_part(compute_phi(boundary(make_su11_cs(0.5, 64), 256), 128), 64);
  for (std::size_t n = 0; n < 64; ++n) EXPECT_NEAR(std::abs(cs[n] - std::sqrt(0.75) * std::pow(0.5, n)), 0.0, 1e-14);

  const auto bg = outer_part(compute_phi(boundary(make_bg(1.0, 40), 256), 128), 30);
  double inv_fact = 1.0;
  for (std::size_t n = 0; n < 30; ++n) {
    if (n > 0) inv_fact /= static_cast<double>(n);
    EXPECT_NEAR(std::abs(bg[n] - inv_fact / std::sqrt(bessel_i0(2.0))), 0.0, 1e-13);
  }
}

TEST(InnerPart, Catalog) {
  const FockState num = make_number(3, 16);
  std::vector<cplx> unit(32);
  unit[0] = 1.0;
  const auto in_num = inner_part(num, unit, 64);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(in_num.coeffs[k], cplx(k == 3 ? 1.0 : 0.0));
  EXPECT_NEAR(in_num.boundary_deviation, 0.0, 1e-14);

  const FactoredState b = factorize(make_blaschke_state(0.5, 64));
  const double expected[] = {-0.5, 0.75, 0.375, 0.1875};
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(std::abs(b.inner_coeffs[k] - expected[k]), 0.0, 1e-13);

  const FactoredState cs = factorize(make_su11_cs(std::polar(0.6, 1.0), 64));
  EXPECT_NEAR(std::abs(cs.inner_coeffs[0] - 1.0), 0.0, 1e-13);
  for (std::size_t k = 1; k < cs.inner_coeffs.size(); ++k) EXPECT_NEAR(std::abs(cs.inner_coeffs[k]), 0.0, 1e-13);
}

TEST(OuterDefect, CatalogValues) {
  const FockState cs = make_su11_cs(0.5, 64);
  EXPECT_NEAR(outer_defect(cs, boundary(cs, 256)), 0.0, 1e-8);

  const FockState num = make_number(2, 16);
  EXPECT_EQ(outer_defect(num, boundary(num, 64)), kInfiniteDefect);

  const FockState b = make_blaschke_state(0.5, 64);
  EXPECT_NEAR(outer_defect(b, boundary(b, 256)), std::numbers::ln2, 1e-10);

  // Oracle: mean of ln|Theta| by a fine independent quadrature.
  const FockState pi_in = make_pi_superposition(0.8, 3 * kPi / 4, 64);
  const auto taylor = pi_in.taylor_coeffs();
  double mean = 0.0;
  const std::size_t pts = 1 << 15;
  for (std::size_t j = 0; j < pts; ++j)
    mean += std::log(std::abs(series::evaluate(taylor, std::polar(1.0, 2 * kPi * (j + 0.5) / pts))));
  mean /= pts;
  EXPECT_NEAR(outer_defect(pi_in, boundary(pi_in, 512)), mean - std::log(std::abs(taylor[0])), 1e-8);
}

TEST(OuterDefect, AdditiveOverBlaschkeZeros) {
  const std::vector<BlaschkeZero> zeros{{0.3, 1}, {cplx{0.0, -0.5}, 1}, {std::polar(0.6, 2.0), 2}};
  const auto taylor = blaschke_product(zeros, 128);
  const FockState s = from_taylor(taylor);
  const double expected = -std::log(0.3) - std::log(0.5) - 2 * std::log(0.6);
  const FactoredState f = factorize(s, {.grid_size = 512});
  EXPECT_NEAR(f.outer_defect, expected, 1e-6);
  EXPECT_NEAR(f.blaschke_defect, expected, 1e-6);
  ASSERT_EQ(f.zeros.zeros.size(), 3u);
  EXPECT_EQ(f.zeros.zeros[2].multiplicity, 2);
}

TEST(BlaschkeZeros, Catalog) {
  const ZeroSet b = blaschke_zeros(make_blaschke_state(0.5, 64));
  ASSERT_EQ(b.zeros.size(), 1u);
  EXPECT_NEAR(std::abs(b.zeros[0].gamma - 0.5), 0.0, 1e-8);
  EXPECT_EQ(b.zeros[0].multiplicity, 1);

  const ZeroSet p = blaschke_zeros(make_pi_superposition(0.8, 3 * kPi / 4, 64));
  ASSERT_EQ(p.zeros.size(), 1u);
  EXPECT_NEAR(std::abs(p.zeros[0].gamma - cplx{0.0, 1 / std::tan(3 * kPi / 8) / 0.8}), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(p.zeros[0].gamma), 0.517766, 1e-6);

  EXPECT_TRUE(blaschke_zeros(make_su11_cs(0.5, 64)).zeros.empty());

  const ZeroSet m = blaschke_zeros(make_number(4, 16));
  EXPECT_EQ(m.origin_order, 4u);
  EXPECT_TRUE(m.zeros.empty());

  EXPECT_THROW(blaschke_zeros(FockState(std::vector<cplx>(4))), DegenerateError);
}

TEST(BlaschkeZeros, EdgeZerosSeparated) {
  // (z - 0.9995)(z + 0.4): one root inside the edge band, one well inside.
  const std::vector<cplx> taylor{-0.9995 * 0.4, 0.4 - 0.9995, 1.0};
  const ZeroSet z = blaschke_zeros(from_taylor(taylor));
  ASSERT_EQ(z.zeros.size(), 1u);
  ASSERT_EQ(z.edge_zeros.size(), 1u);
  EXPECT_NEAR(std::abs(z.zeros[0].gamma + 0.4), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(z.edge_zeros[0].gamma - 0.9995), 0.0, 1e-12);
}

TEST(BlaschkeProduct, Expansions) {
  const std::vector<BlaschkeZero> single{{0.5, 1}};
  const auto b = blaschke_product(single, 6);
  // (0.5 - z)/(1 - 0.5 z) = 0.5 - 0.75 sum 0.5^{k-1} z^k.
  EXPECT_NEAR(std::abs(b[0] - 0.5), 0.0, 1e-15);
  for (std::size_t k = 1; k < 6; ++k) EXPECT_NEAR(std::abs(b[k] + 0.75 * std::pow(0.5, k - 1)), 0.0, 1e-15);

  const auto empty = blaschke_product({}, 4);
  EXPECT_EQ(empty[0], cplx(1.0));
  EXPECT_EQ(empty[3], cplx(0.0));

  const std::vector<BlaschkeZero> pair{{0.3, 1}, {-0.3, 1}};
  const auto p = blaschke_product(pair, 12);
  // (0.09 - z^2) / (1 - 0.09 z^2).
  std::vector<cplx> expected(12);
  for (std::size_t k = 0; k < 12; k += 2) {
    expected[k] += 0.09 * std::pow(0.09, k / 2);
    if (k + 2 < 12) expected[k + 2] -= std::pow(0.09, k / 2);
  }
  EXPECT_LT(max_diff(p, expected, 12), 1e-15);

  const std::vector<BlaschkeZero> at_origin{{0.0, 1}};
  EXPECT_THROW(blaschke_product(at_origin, 4), DomainError);
  const std::vector<BlaschkeZero> outside{{1.2, 1}};
  EXPECT_THROW(blaschke_product(outside, 4), DomainError);
}

TEST(Factorize, NumberOutIsOuter) {
  for (std::size_t m : {1u, 2u, 7u}) {
    const FactoredState f = factorize(number_out(m, 64), {.grid_size = 512});
    EXPECT_TRUE(f.is_outer(1e-6)) << m;
    EXPECT_NEAR(std::abs(f.inner_coeffs[0]), 1.0, 1e-5);
    for (std::size_t k = 1; k < f.inner_coeffs.size(); ++k) EXPECT_NEAR(std::abs(f.inner_coeffs[k]), 0.0, 1e-5);
    EXPECT_LT(f.reconstruction_residual, 1e-5);
    EXPECT_TRUE(f.zeros.zeros.empty());
  }
}

TEST(Factorize, PiSuperpositionInnerIsBlaschkeFactor) {
  const double tau = 3 * kPi / 4;
  const cplx z0 = std::polar(0.8, 0.3);
  const FactoredState f = factorize(make_pi_superposition(z0, tau, 64), {.grid_size = 512});
  const cplx gamma = cplx{0.0, 1.0} / std::tan(tau / 2) / std::conj(z0);
  ASSERT_EQ(f.zeros.zeros.size(), 1u);
  EXPECT_NEAR(std::abs(f.zeros.zeros[0].gamma - gamma), 0.0, 1e-8);

  // The outer part is normalised to b_0 > 0, which moves e^{-i tau/2} into the inner part.
  const std::vector<BlaschkeZero> zeros{{gamma, 1}};
  auto expected = blaschke_product(zeros, f.inner_coeffs.size());
  for (auto& c : expected) c *= std::polar(1.0, -tau / 2);
  EXPECT_LT(max_diff(f.inner_coeffs, expected, expected.size()), 1e-10);

  // Outer part against the printed closed form, with the same constant moved across.
  const double nrm = pi_superposition_norm(z0, tau);
  const cplx a = 2 / std::sqrt(nrm) * std::sqrt(1 - std::norm(z0)) * std::polar(1.0, -tau / 2);
  const cplx pref = std::polar(1.0, tau / 2) * a * std::conj(z0) / std::abs(z0);
  std::vector<cplx> outer(f.outer_coeffs.size());
  const cplx q = std::conj(z0) * std::conj(z0);
  for (std::size_t k = 0; 2 * k < outer.size(); ++k) {
    const cplx qk = std::pow(q, static_cast<double>(k));
    outer[2 * k] += pref * z0 * std::sin(tau / 2) * qk;
    if (2 * k + 1 < outer.size()) outer[2 * k + 1] += pref * cplx{0.0, std::cos(tau / 2)} * qk;
  }
  EXPECT_LT(max_diff(f.outer_coeffs, outer, 64), 1e-10);
}

TEST(Factorize, PiSuperpositionOuterRegime) {
  const FactoredState f = factorize(make_pi_superposition(0.3, 3 * kPi / 4, 64), {.grid_size = 512});
  EXPECT_TRUE(f.is_outer(1e-6));
  EXPECT_TRUE(f.zeros.zeros.empty());
  EXPECT_NEAR(std::abs(f.inner_coeffs[0]), 1.0, 1e-10);
}

TEST(Factorize, DiagnosticsOnCatalog) {
  const std::vector<FockState> states{make_su11_cs(std::polar(0.8, 1.0), 64), make_bg(std::polar(3.0, 0.2), 64),
                                      make_blaschke_state(std::polar(0.7, -1.0), 64),
                                      make_pi_superposition(0.8, 3 * kPi / 4, 64), number_out(3, 64)};
  std::mt19937_64 rng(9);
  // Phi is truncated at M/2 terms; for boundary-zero states its tail is
  // ~r^{M/2}/(M/2), so the lattice stays inside |z| <= 0.9.
  std::uniform_real_distribution<double> rad(0.0, 0.9), ang(-kPi, kPi);
  for (const auto& s : states) {
    const FactoredState f = factorize(s, {.grid_size = 512});
    EXPECT_FALSE(f.singular_suspected);
    EXPECT_FALSE(f.ill_conditioned);
    EXPECT_NEAR(f.phi.phi[0].imag(), 0.0, 1e-10);
    EXPECT_LT(f.inner_boundary_deviation, 1e-6);

    // Phase distribution depends only on the outer part.
    const auto b = boundary(s, 512);
    const auto bo = boundary_of_series(std::span<const cplx>(f.outer_coeffs).first(256), 512);
    for (std::size_t j = 0; j < 512; ++j)
      EXPECT_NEAR(std::norm(b.values[j]) / (2 * kPi), std::norm(bo.values[j]) / (2 * kPi), 1e-6);

    // ln|Z| <= Re Phi inside the disk.
    const auto taylor = s.taylor_coeffs();
    for (int i = 0; i < 50; ++i) {
      const cplx z = std::polar(rad(rng), ang(rng));
      EXPECT_LE(std::log(std::abs(series::evaluate(taylor, z))), series::evaluate(f.phi.phi, z).real() + 1e-8);
    }
  }
}

TEST(Factorize, MonomialFactoredOut) {
  // z^2 (z - 0.4)/(1 - 0.4 z): origin order 2 plus one disk zero.
  const std::vector<BlaschkeZero> zeros{{0.4, 1}};
  auto taylor = blaschke_product(zeros, 126);
  taylor.insert(taylor.begin(), 2, cplx{});
  const FactoredState f = factorize(from_taylor(taylor), {.grid_size = 512});
  EXPECT_EQ(f.zeros.origin_order, 2u);
  EXPECT_EQ(f.outer_defect, kInfiniteDefect);
  EXPECT_NEAR(f.reduced_outer_defect, -std::log(0.4), 1e-8);
  EXPECT_LT(f.reconstruction_residual, 1e-10);
}

TEST(Factorize, InnerStatePlusVacuumIsOuter) {
  // Z + 1 for a Blaschke-state Z has a zero on the circle but none inside.
  auto taylor = make_blaschke_state(std::polar(0.5, 0.7), 64).taylor_coeffs();
  taylor[0] += 1.0;
  const FactoredState f = factorize(from_taylor(taylor), {.grid_size = 512});
  EXPECT_TRUE(f.is_outer(1e-6));
}

TEST(Factorize, Preconditions) {
  EXPECT_THROW(factorize(make_number(1, 8), {.grid_size = 8}), AliasingError);
  EXPECT_THROW(factorize(make_number(1, 8), {.grid_size = 64, .series_length = 4}), DomainError);
  EXPECT_THROW(factorize(FockState(std::vector<cplx>(4)), {}), DegenerateError);
}
