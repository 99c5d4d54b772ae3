#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "phasefact/barut_girardello.hpp"
#include "phasefact/disk_analytic.hpp"
#include "phasefact/errors.hpp"
#include "phasefact/roots.hpp"
#include "phasefact/series.hpp"
#include "phasefact/weyl.hpp"
#include "phasefact/wigner.hpp"

namespace phasefact::cli {

namespace {

constexpr double kPi = std::numbers::pi;

enum class Expect { outer, disk_zeros, monomial };

struct Entry {
  Entry(std::string n, FockState s, Expect e = Expect::outer, std::vector<cplx> z = {})
      : name(std::move(n)), state(std::move(s)), expect(e), zeros(std::move(z)) {}

  std::string name;
  FockState state;
  Expect expect;
  std::vector<cplx> zeros;      // analytic disk zeros, for disk_zeros entries
  std::size_t monomial = 0;     // origin order, for monomial entries
  bool boundary_zeros = false;  // zeros on the unit circle
};

FockState number_out(std::size_t m, std::size_t n) {
  const std::vector<FockState> parts{make_number(0, n), make_number(m, n)};
  const double a = 1.0 / std::numbers::sqrt2;
  const std::vector<cplx> amps{a, a};
  return superpose(parts, amps);
}

cplx pi_zero(cplx z0, double tau) {
  return cplx{0.0, 1.0} * (std::cos(0.5 * tau) / std::sin(0.5 * tau)) / std::conj(z0);
}

std::vector<Entry> build_catalog(std::size_t n) {
  std::vector<Entry> c;
  for (std::size_t m = 0; m <= 8; ++m) {
    Entry e{fmt::format("number m={}", m), make_number(m, n)};
    if (m > 0) {
      e.expect = Expect::monomial;
      e.monomial = m;
    }
    c.push_back(std::move(e));
  }
  for (std::size_t m : {1, 2, 3, 5, 8}) {
    Entry e{fmt::format("number_out m={}", m), number_out(m, n)};
    e.boundary_zeros = true;
    c.push_back(std::move(e));
  }
  for (cplx z : {cplx{0.3, 0.0}, cplx{0.0, 0.5}, cplx{0.8, 0.0}, std::polar(0.8, 2.0)})
    c.push_back({fmt::format("su11_cs z=({},{})", z.real(), z.imag()), make_su11_cs(z, n)});
  for (cplx u : {cplx{0.5, 0.0}, cplx{0.0, 1.5}, cplx{3.0, 0.0}, std::polar(3.0, -2.2)})
    c.push_back({fmt::format("bg u=({:.3g},{:.3g})", u.real(), u.imag()), make_bg(u, n)});
  for (cplx z : {cplx{0.5, 0.0}, cplx{0.3, 0.4}, std::polar(0.7, -1.0)}) {
    Entry e{fmt::format("blaschke z=({:.3g},{:.3g})", z.real(), z.imag()), make_blaschke_state(z, n),
            Expect::disk_zeros, {z}};
    c.push_back(std::move(e));
  }
  c.push_back({"pi_superposition z=0.5 tau=pi/2", make_pi_superposition(0.5, kPi / 2, n)});
  {
    const cplx z0 = 0.8;
    const double tau = 3 * kPi / 4;
    c.push_back({"pi_superposition z=0.8 tau=3pi/4", make_pi_superposition(z0, tau, n),
                 Expect::disk_zeros, {pi_zero(z0, tau)}});
  }
  return c;
}

class Runner {
 public:
  Runner(std::vector<CheckResult>& out, const std::function<void(const CheckResult&)>& progress)
      : out_(out), progress_(progress) {}

  // `body` returns the residual; it may throw, which counts as a failure.
  template <typename F>
  void check(int criterion, std::string name, double tolerance, F&& body) {
    CheckResult r;
    r.criterion = criterion;
    r.name = std::move(name);
    r.tolerance = tolerance;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.residual = body(r);
      r.passed = std::isfinite(r.residual) && r.residual <= tolerance && r.note.empty();
    } catch (const std::exception& e) {
      r.residual = std::numeric_limits<double>::infinity();
      r.note = e.what();
      r.passed = false;
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out_.push_back(r);
    if (progress_) progress_(out_.back());
  }

 private:
  std::vector<CheckResult>& out_;
  const std::function<void(const CheckResult&)>& progress_;
};

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double r = 0.0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const cplx x = i < a.size() ? a[i] : cplx{};
    const cplx y = i < b.size() ? b[i] : cplx{};
    r = std::max(r, std::abs(x - y));
  }
  return r;
}

FactorOptions options_for(const RunConfig& config) {
  FactorOptions o;
  o.grid_size = config.grid;
  o.edge_margin = config.edge_margin;
  o.outer_tol = config.outer_tol;
  return o;
}

void factorisation_checks(Runner& run, const RunConfig& config, const std::vector<Entry>& catalog) {
  const FactorOptions opts = options_for(config);
  for (const Entry& e : catalog) {
    FactoredState f;
    double seconds = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string failure;
    try {
      f = factorize(e.state, opts);
    } catch (const std::exception& ex) {
      ok = false;
      failure = ex.what();
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto bail = [&](CheckResult& r) {
      r.note = failure;
      return std::numeric_limits<double>::infinity();
    };

    // 1: outer * inner reproduces the Taylor coefficients.
    run.check(1, "reconstruction " + e.name, e.boundary_zeros ? 1e-5 : 1e-8, [&](CheckResult& r) {
      if (!ok) return bail(r);
      if (seconds > 1.0) r.note = fmt::format("factorize took {:.3f} s (> 1 s)", seconds);
      const auto product = series::multiply(f.outer_coeffs, f.inner_coeffs, f.outer_coeffs.size());
      return max_abs_diff(product, e.state.taylor_coeffs());
    });

    // 2: outer criterion.
    switch (e.expect) {
      case Expect::outer:
        run.check(2, "outer defect " + e.name, config.outer_tol, [&](CheckResult& r) {
          if (!ok) return bail(r);
          return f.outer_defect;
        });
        break;
      case Expect::monomial:
        run.check(2, "monomial inner " + e.name, config.outer_tol, [&](CheckResult& r) {
          if (!ok) return bail(r);
          if (f.zeros.origin_order != e.monomial)
            r.note = fmt::format("origin order {} != {}", f.zeros.origin_order, e.monomial);
          if (!f.zeros.zeros.empty()) r.note = "unexpected disk zeros";
          return f.reduced_outer_defect;
        });
        break;
      case Expect::disk_zeros:
        run.check(2, "blaschke defect " + e.name, 1e-4, [&](CheckResult& r) {
          if (!ok) return bail(r);
          double expected = 0.0;
          for (const cplx& g : e.zeros) expected += -std::log(std::abs(g));
          return std::max(std::abs(f.outer_defect - f.blaschke_defect),
                          std::abs(f.outer_defect - expected));
        });
        break;
    }

    // 3: inner criteria, recomputed from the inner coefficients.
    run.check(3, "inner modulus " + e.name, 1e-6, [&](CheckResult& r) {
      if (!ok) return bail(r);
      const auto s = boundary_of_series(f.inner_coeffs, 2 * f.grid_size);
      double dev = 0.0;
      for (const cplx& v : s.values) dev = std::max(dev, std::abs(std::abs(v) - 1.0));
      for (int i = 1; i <= 19; ++i) {
        const double rad = 0.05 * i;
        for (int k = 0; k < 64; ++k) {
          const double mod = std::abs(series::evaluate(f.inner_coeffs, std::polar(rad, 2 * kPi * k / 64)));
          dev = std::max(dev, mod - 1.0);
        }
      }
      return dev;
    });
  }

  // 2: the Blaschke state at z0 = 0.5 has defect ln 2.
  run.check(2, "blaschke z0=0.5 defect = ln 2", 1e-6, [&](CheckResult&) {
    const FactoredState f = factorize(make_blaschke_state(0.5, config.truncation), opts);
    return std::abs(f.outer_defect - std::numbers::ln2);
  });

  // 4: zero extraction.
  run.check(4, "blaschke z0=0.5 zero", 1e-8, [&](CheckResult& r) {
    const FactoredState f = factorize(make_blaschke_state(0.5, config.truncation), opts);
    if (f.zeros.zeros.size() != 1) {
      r.note = fmt::format("{} zeros found", f.zeros.zeros.size());
      return 1.0;
    }
    return std::abs(f.zeros.zeros[0].gamma - 0.5);
  });
  run.check(4, "pi_superposition z0=0.8 tau=3pi/4 zero", 1e-6, [&](CheckResult& r) {
    const cplx z0 = 0.8;
    const double tau = 3 * kPi / 4;
    const FockState s = make_pi_superposition(z0, tau, config.truncation);
    const FactoredState f = factorize(s, opts);
    if (f.zeros.zeros.size() != 1) {
      r.note = fmt::format("{} zeros found", f.zeros.zeros.size());
      return 1.0;
    }
    const cplx gamma = f.zeros.zeros[0].gamma;
    // Companion-matrix oracle: nearest root of the raw polynomial.
    const auto roots = polynomial_roots(s.taylor_coeffs());
    double oracle = std::numeric_limits<double>::infinity();
    for (const cplx& z : roots) oracle = std::min(oracle, std::abs(z - gamma));
    return std::max(std::abs(gamma - pi_zero(z0, tau)), oracle);
  });
}

void weyl_checks(Runner& run, const RunConfig& config) {
  std::mt19937_64 rng(20260417);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> shift_m(0, 5);

  std::vector<cplx> raw(24);
  for (auto& c : raw) c = {unit(rng), unit(rng)};
  double norm = 0.0;
  for (const auto& c : raw) norm += std::norm(c);
  for (auto& c : raw) c /= std::sqrt(norm);
  const FockState base(raw);

  run.check(5, "composition law, 100 random pairs", 1e-12, [&](CheckResult&) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const WeylElement w1(shift_m(rng), angle(rng), angle(rng));
      const WeylElement w2(shift_m(rng), angle(rng), angle(rng));
      const FockState a = apply(compose(w1, w2), base);
      const FockState b = apply(w1, apply(w2, base));
      worst = std::max(worst, max_abs_diff(a.coeffs(), b.coeffs()));
    }
    return worst;
  });
  run.check(5, "isometry", 1e-12, [&](CheckResult&) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const WeylElement w(shift_m(rng), angle(rng), angle(rng));
      const FockState g = apply(w, base);
      worst = std::max(worst, std::abs(g.truncated_norm2() - base.truncated_norm2()));
      worst = std::max(worst, max_abs_diff(apply_adjoint(w, g).coeffs(), base.coeffs()));
    }
    return worst;
  });
  run.check(5, "phase distribution shift", 1e-10, [&](CheckResult&) {
    const FockState f = make_pi_superposition(std::polar(0.6, 0.4), 1.0, config.truncation);
    const auto taylor = f.taylor_coeffs();
    double worst = 0.0;
    for (const WeylElement& w : {WeylElement(3, 0.9, -0.2), WeylElement(0, -2.1, 1.0), WeylElement(7, 0.0, 0.0)}) {
      const FockState g = apply(w, f);
      const std::size_t m = std::max<std::size_t>(config.grid, default_grid_size(g.truncation()));
      const auto pg = phase_distribution(g, m);
      const auto theta = midpoint_grid(m);
      for (std::size_t j = 0; j < m; ++j) {
        const double pf = std::norm(series::evaluate(taylor, std::polar(1.0, theta[j] - w.beta()))) / (2 * kPi);
        worst = std::max(worst, std::abs(pg[j] - pf));
      }
    }
    return worst;
  });
  run.check(5, "eigenrelation su11 |z>_m", 1e-12, [&](CheckResult&) {
    const cplx z = std::polar(0.5, 0.3);
    double worst = 0.0;
    for (std::size_t m = 0; m <= 4; ++m)
      worst = std::max(worst, eigenrelation_check(EigenFamily::su11_cs, z,
                                                  shift(make_su11_cs(z, config.truncation), m), m));
    return worst;
  });
  run.check(5, "eigenrelation bg |u>_m", 1e-12, [&](CheckResult&) {
    const cplx u{0.0, 1.2};
    double worst = 0.0;
    for (std::size_t m = 0; m <= 4; ++m)
      worst = std::max(worst, eigenrelation_check(EigenFamily::bg, u,
                                                  shift(make_bg(u, config.truncation), m), m));
    return worst;
  });
}

void bg_checks(Runner& run, const RunConfig& config) {
  const std::size_t n = config.truncation;
  const FactorOptions opts = options_for(config);
  struct Named {
    std::string name;
    FockState state;
  };
  const std::vector<Named> states{
      {"number m=3", make_number(3, n)},
      {"su11_cs z=0.5", make_su11_cs(0.5, n)},
      {"su11_cs z=0.8i", make_su11_cs(cplx{0.0, 0.8}, n)},
      {"bg u=1", make_bg(1.0, n)},
      {"bg u=3", make_bg(3.0, n)},
      {"blaschke z=0.5", make_blaschke_state(0.5, n)},
      {"pi_superposition z=0.5 tau=pi/2", make_pi_superposition(0.5, kPi / 2, n)},
      {"pi_superposition z=0.8 tau=3pi/4", make_pi_superposition(0.8, 3 * kPi / 4, n)},
  };

  for (const auto& s : states) {
    run.check(6, "laplace round trip " + s.name, 1e-6, [&](CheckResult&) {
      const BGFunction fn = bg_function(s.state);
      double worst = 0.0;
      for (int k = 0; k < 10; ++k) {
        const cplx z = std::polar(0.1 + 0.02 * k, -kPi / 3 + k * (2 * kPi / 3) / 9);
        worst = std::max(worst, std::abs(laplace_to_disk(fn, z) - eval_Z(s.state, z)));
      }
      return worst;
    });
    run.check(6, "convolution " + s.name, 1e-6, [&](CheckResult& r) {
      const BGFactorParts parts = bg_factor_parts(factorize(s.state, opts));
      const BGFunction fn = bg_function(s.state);
      double worst = 0.0;
      for (int k = 0; k < 10; ++k) {
        const cplx u = std::polar(0.2 + 0.18 * k, 0.7 * k);
        if (!within_validated_radius(parts.inner, parts.outer, u)) r.note = "sample outside validated radius";
        worst = std::max(worst, std::abs(bg_convolve(parts.inner, parts.outer, u) - fn(u)));
      }
      return worst;
    });
  }

  run.check(6, "number-state atoms", 1e-12, [&](CheckResult&) {
    double worst = 0.0;
    for (std::size_t m = 0; m <= 8; ++m) {
      const FockState s = make_number(m, n);
      const BGFactorParts parts = bg_factor_parts(factorize(s, opts));
      worst = std::max(worst, std::abs(parts.outer.atom - 2.0));
      for (const cplx& c : parts.outer.smooth) worst = std::max(worst, std::abs(c));
      double inv_fact = 1.0;
      for (std::size_t k = 1; k <= m; ++k) inv_fact /= static_cast<double>(k);
      for (std::size_t k = 0; k < parts.inner.smooth.size(); ++k)
        worst = std::max(worst, std::abs(parts.inner.smooth[k] - (k == m ? inv_fact : 0.0)));
      const BGFunction fn = bg_function(s);
      for (std::size_t k = 0; k < fn.smooth.size(); ++k)
        worst = std::max(worst, std::abs(fn.smooth[k] - (k == m ? inv_fact : 0.0)));
    }
    return worst;
  });
  run.check(6, "identity resolution n,m <= 6", 1e-3, [&](CheckResult&) {
    const auto mat = bg_identity_resolution(6);
    double worst = 0.0;
    for (std::size_t i = 0; i < mat.size(); ++i)
      for (std::size_t j = 0; j < mat[i].size(); ++j)
        worst = std::max(worst, std::abs(mat[i][j] - (i == j ? 1.0 : 0.0)));
    return worst;
  });
}

void wigner_checks(Runner& run, const RunConfig& config, const std::vector<Entry>& catalog) {
  const std::size_t n = config.truncation;
  for (const Entry& e : catalog) {
    run.check(7, "wigner marginals " + e.name, 1e-8, [&](CheckResult& r) {
      const WignerGrid grid = wigner_grid(e.state, e.state.truncation(), config.grid);
      const auto number = grid.number_marginal();
      const auto pn = number_distribution(e.state);
      double number_res = 0.0;
      for (std::size_t k = 0; k < number.size(); ++k)
        number_res = std::max(number_res, std::abs(number[k] - (k < pn.size() ? pn[k] : 0.0)));
      const auto phase = grid.phase_marginal();
      const auto expected = phase_distribution(e.state, config.grid);
      double phase_res = 0.0;
      for (std::size_t j = 0; j < phase.size(); ++j)
        phase_res = std::max(phase_res, std::abs(phase[j] - expected[j]));
      if (phase_res > 1e-6) r.note = fmt::format("phase marginal residual {:.3e} > 1e-6", phase_res);
      return number_res;
    });
  }

  struct Closed {
    std::string name;
    WignerFamily family;
    WignerParams params;
    FockState state;
  };
  const cplx z = std::polar(0.5, 0.4);
  const cplx u = std::polar(1.5, -0.7);
  const cplx zb = std::polar(0.6, 1.1);
  const std::vector<Closed> closed{
      {"number m=3", WignerFamily::number, {3, {}, 0.0}, make_number(3, n)},
      {"number_out m=3", WignerFamily::number_out, {3, {}, 0.0}, number_out(3, n)},
      {"number_out m=4", WignerFamily::number_out, {4, {}, 0.0}, number_out(4, n)},
      {"su11_cs", WignerFamily::su11_cs, {0, z, 0.0}, make_su11_cs(z, n)},
      {"bg", WignerFamily::bg, {0, u, 0.0}, make_bg(u, n)},
      {"blaschke", WignerFamily::blaschke, {0, zb, 0.0}, make_blaschke_state(zb, n)},
      {"pi_superposition outer", WignerFamily::pi_superposition, {0, 0.5, kPi / 2},
       make_pi_superposition(0.5, kPi / 2, n)},
      {"pi_superposition inner", WignerFamily::pi_superposition, {0, std::polar(0.8, -0.5), 3 * kPi / 4},
       make_pi_superposition(std::polar(0.8, -0.5), 3 * kPi / 4, n)},
  };
  const auto theta = midpoint_grid(64);
  for (const auto& c : closed) {
    run.check(7, "wigner closed form " + c.name, 1e-9, [&](CheckResult&) {
      double worst = 0.0;
      for (std::size_t k = 0; k < 16; ++k)
        for (double t : theta)
          worst = std::max(worst, std::abs(wigner_closed_form(c.family, c.params, k, t) - wigner(c.state, k, t)));
      return worst;
    });
  }

  run.check(7, "wigner shift covariance", 1e-10, [&](CheckResult&) {
    const FockState cs = make_su11_cs(0.5, n);
    const FockState bl = make_blaschke_state(std::polar(0.5, 0.3), n);
    double worst = shift_covariance_check(cs, WeylElement(2, 0.0, 0.0), 16, 64);
    worst = std::max(worst, shift_covariance_check(cs, WeylElement(0, 0.7, 0.0), 16, 64));
    worst = std::max(worst, shift_covariance_check(bl, WeylElement(3, 1.1, -0.4), 16, 64));
    worst = std::max(worst, shift_covariance_check(bl, WeylElement::identity(), 16, 64));
    return worst;
  });

  run.check(7, "wigner of outer part equals wigner of state", 1e-8, [&](CheckResult&) {
    const FockState f = make_pi_superposition(0.5, kPi / 2, n);
    const FactoredState fac = factorize(f, options_for(config));
    std::vector<cplx> coeffs(n);
    for (std::size_t k = 0; k < n; ++k) coeffs[k] = std::conj(fac.outer_coeffs[k]);
    double norm = 0.0;
    for (const auto& c : coeffs) norm += std::norm(c);
    if (norm > 1.0)
      for (auto& c : coeffs) c /= std::sqrt(norm);
    const FockState outer(coeffs, std::max(0.0, 1.0 - std::min(norm, 1.0)));
    double worst = 0.0;
    for (std::size_t k = 0; k < 16; ++k)
      for (double t : theta) worst = std::max(worst, std::abs(wigner(outer, k, t) - wigner(f, k, t)));
    return worst;
  });
}

void kernel_checks(Runner& run) {
  run.check(8, "conjugate kernel -> cot(theta/2) at r = 1 - 1e-3", 5e-3, [&](CheckResult&) {
    const double r = 1.0 - 1e-3;
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double t = 0.3 + (kPi - 0.6) * i / 200.0;
      const double limit = 1.0 / std::tan(0.5 * t);
      worst = std::max(worst, std::abs(conjugate_kernel(r, t) - limit) / std::abs(limit));
    }
    return worst;
  });
  run.check(8, "poisson kernel mass", 1e-10, [&](CheckResult&) {
    constexpr int kPoints = 8192;
    double worst = 0.0;
    for (double r : {0.0, 0.3, 0.5, 0.9, 0.95, 0.99}) {
      double sum = 0.0;
      for (int j = 0; j < kPoints; ++j) sum += poisson_kernel(r, -kPi + (2 * j + 1) * kPi / kPoints);
      worst = std::max(worst, std::abs(sum / kPoints - 1.0));
    }
    return worst;
  });
  run.check(8, "cauchy reconstruction from boundary", 1e-10, [&](CheckResult&) {
    const FockState f = make_pi_superposition(std::polar(0.6, 0.2), 1.3, 64);
    const auto s = boundary(f, 512);
    double worst = 0.0;
    for (cplx z : {cplx{0.0, 0.0}, cplx{0.5, 0.2}, cplx{-0.7, 0.1}, cplx{0.1, -0.9}})
      worst = std::max(worst, std::abs(reconstruct_from_boundary(s, z) - eval_Z(f, z)));
    return worst;
  });
}

}  // namespace

std::vector<CheckResult> run_catalog(const RunConfig& config,
                                     const std::function<void(const CheckResult&)>& progress) {
  validate(config);
  std::vector<CheckResult> results;
  Runner run(results, progress);
  const auto catalog = build_catalog(config.truncation);
  factorisation_checks(run, config, catalog);
  weyl_checks(run, config);
  bg_checks(run, config);
  wigner_checks(run, config, catalog);
  kernel_checks(run);
  std::stable_sort(results.begin(), results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.criterion < b.criterion; });
  return results;
}

nlohmann::json catalog_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"criterion", r.criterion},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"residual", std::isfinite(r.residual) ? nlohmann::json(r.residual) : nlohmann::json(nullptr)},
                      {"tolerance", r.tolerance},
                      {"note", r.note}});
  }
  return {{"all_passed", all}, {"checks", checks}};
}

std::string format_catalog(const std::vector<CheckResult>& results, Format format) {
  if (format == Format::json) return catalog_json(results).dump() + "\n";
  std::string out;
  if (format == Format::csv) {
    out = "criterion,name,passed,residual,tolerance,note\n";
    for (const auto& r : results)
      out += fmt::format("{},\"{}\",{},{:.6e},{:.1e},\"{}\"\n", r.criterion, r.name, r.passed ? 1 : 0,
                         r.residual, r.tolerance, r.note);
    return out;
  }
  std::size_t failed = 0;
  for (const auto& r : results) {
    failed += r.passed ? 0 : 1;
    out += fmt::format("{} [{}] {}: residual {:.3e} (tol {:.1e}){}\n", r.passed ? "PASS" : "FAIL",
                       r.criterion, r.name, r.residual, r.tolerance, r.note.empty() ? "" : "  " + r.note);
  }
  out += fmt::format("{} of {} checks passed\n", results.size() - failed, results.size());
  return out;
}

}  // namespace phasefact::cli
