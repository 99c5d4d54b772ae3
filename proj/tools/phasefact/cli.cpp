#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <fmt/format.h>

#include "phasefact/barut_girardello.hpp"
#include "phasefact/disk_analytic.hpp"
#include "phasefact/errors.hpp"
#include "phasefact/wigner.hpp"
#include "verify.hpp"

namespace phasefact::cli {

using nlohmann::json;

namespace {

json complex_array(std::span<const cplx> values) {
  json out = json::array();
  for (const cplx& v : values) out.push_back(to_json(v));
  return out;
}

json zero_list(const std::vector<BlaschkeZero>& zeros) {
  json out = json::array();
  for (const auto& z : zeros)
    out.push_back({{"gamma", to_json(z.gamma)}, {"multiplicity", z.multiplicity}});
  return out;
}

// JSON has no infinity; an infinite defect is reported as null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

Format resolve(Format requested, Format fallback) {
  return requested == Format::automatic ? fallback : requested;
}

std::string real(double x) { return fmt::format("{:.17g}", x); }

FactorOptions factor_options(const RunConfig& config) {
  FactorOptions opts;
  opts.grid_size = config.grid;
  opts.edge_margin = config.edge_margin;
  opts.outer_tol = config.outer_tol;
  return opts;
}

}  // namespace

json factor_report(const FactoredState& f, double outer_tol) {
  json notes = json::array();
  if (f.zeros.origin_order > 0)
    notes.push_back(fmt::format("leading monomial z^{} divided out before the zero search",
                                f.zeros.origin_order));
  if (!f.zeros.edge_zeros.empty())
    notes.push_back("zeros within edge_margin of the unit circle are reported but unreliable");
  if (f.singular_suspected)
    notes.push_back("defect exceeds the Blaschke contribution: singular inner factor suspected");
  if (f.ill_conditioned) notes.push_back("inner part fails the boundary or defect consistency check");

  return {
      {"truncation", f.truncation},
      {"grid_size", f.grid_size},
      {"is_outer", f.is_outer(outer_tol)},
      {"outer_defect", finite_or_null(f.outer_defect)},
      {"reduced_outer_defect", f.reduced_outer_defect},
      {"blaschke_defect", f.blaschke_defect},
      {"origin_order", f.zeros.origin_order},
      {"zeros", zero_list(f.zeros.zeros)},
      {"edge_zeros", zero_list(f.zeros.edge_zeros)},
      {"singular_suspected", f.singular_suspected},
      {"ill_conditioned", f.ill_conditioned},
      {"reconstruction_residual", f.reconstruction_residual},
      {"inner_boundary_deviation", f.inner_boundary_deviation},
      {"refinement_delta", f.refinement_delta},
      {"notes", notes},
      {"phi", complex_array(f.phi.phi)},
      {"outer_coeffs", complex_array(f.outer_coeffs)},
      {"inner_coeffs", complex_array(f.inner_coeffs)},
  };
}

std::string cmd_state(const FockState& state, const RunConfig& config) {
  const auto p = number_distribution(state);
  if (resolve(config.format, Format::json) == Format::csv) {
    std::string out = "n,re,im,probability\n";
    for (std::size_t n = 0; n < state.truncation(); ++n)
      out += fmt::format("{},{},{},{}\n", n, real(state[n].real()), real(state[n].imag()), real(p[n]));
    return out;
  }
  const json report = {{"truncation", state.truncation()},
                       {"norm_defect", state.norm_defect()},
                       {"coefficients", complex_array(state.coeffs())},
                       {"number_distribution", p}};
  return report.dump() + "\n";
}

std::string cmd_factor(const FockState& state, const RunConfig& config) {
  const FactoredState f = factorize(state, factor_options(config));
  if (resolve(config.format, Format::json) == Format::csv) {
    std::string out = "n,outer_re,outer_im,inner_re,inner_im\n";
    for (std::size_t n = 0; n < f.outer_coeffs.size(); ++n)
      out += fmt::format("{},{},{},{},{}\n", n, real(f.outer_coeffs[n].real()),
                         real(f.outer_coeffs[n].imag()), real(f.inner_coeffs[n].real()),
                         real(f.inner_coeffs[n].imag()));
    return out;
  }
  return factor_report(f, config.outer_tol).dump() + "\n";
}

std::string cmd_phase_dist(const FockState& state, const RunConfig& config) {
  const BoundarySamples s = boundary(state, config.grid);
  const auto p = phase_distribution(s);
  if (resolve(config.format, Format::csv) == Format::json) {
    json theta = s.theta;
    json density = p;
    const json report = {{"grid_size", s.grid_size},
                         {"theta", theta},
                         {"boundary", complex_array(s.values)},
                         {"phase_density", density}};
    return report.dump() + "\n";
  }
  std::string out = "theta,re_theta_fn,im_theta_fn,phase_density\n";
  for (std::size_t j = 0; j < s.grid_size; ++j)
    out += fmt::format("{},{},{},{}\n", real(s.theta[j]), real(s.values[j].real()),
                       real(s.values[j].imag()), real(p[j]));
  return out;
}

std::string cmd_wigner(const FockState& state, const RunConfig& config) {
  const std::size_t n_max = config.n_max.value_or(state.truncation() - 1);
  const WignerGrid grid = wigner_grid(state, n_max, config.grid);

  if (resolve(config.format, Format::csv) == Format::json) {
    const auto number = grid.number_marginal();
    const auto pn = number_distribution(state);
    double number_residual = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n)
      number_residual = std::max(number_residual, std::abs(number[n] - (n < pn.size() ? pn[n] : 0.0)));

    json phase_residual = nullptr;
    if (n_max + 1 >= state.truncation()) {
      const auto phase = grid.phase_marginal();
      const auto expected = phase_distribution(state, config.grid);
      double r = 0.0;
      for (std::size_t j = 0; j < phase.size(); ++j) r = std::max(r, std::abs(phase[j] - expected[j]));
      phase_residual = r;
    }
    const auto [lo, hi] = std::minmax_element(grid.values().begin(), grid.values().end());
    const json report = {{"n_max", n_max},
                         {"grid_size", config.grid},
                         {"number_marginal_residual", number_residual},
                         {"phase_marginal_residual", phase_residual},
                         {"min", *lo},
                         {"max", *hi}};
    return report.dump() + "\n";
  }
  std::string out = "n,theta,S\n";
  for (std::size_t n = 0; n <= n_max; ++n)
    for (std::size_t j = 0; j < grid.theta().size(); ++j)
      out += fmt::format("{},{},{}\n", n, real(grid.theta()[j]), real(grid.at(n, j)));
  return out;
}

std::string cmd_bg(const FockState& state, const RunConfig& config) {
  const BGFunction fn = bg_function(state);
  const cplx direction = std::polar(1.0, config.ray_angle);
  std::vector<double> t(config.ray_points);
  std::vector<cplx> values(config.ray_points);
  for (std::size_t i = 0; i < config.ray_points; ++i) {
    t[i] = config.t_max * static_cast<double>(i) / static_cast<double>(config.ray_points - 1);
    values[i] = fn(t[i] * direction);
  }

  if (resolve(config.format, Format::csv) == Format::json) {
    const FactoredState f = factorize(state, factor_options(config));
    const BGFactorParts parts = bg_factor_parts(f);
    json ray = t;
    const json report = {{"atom", to_json(fn.atom)},
                         {"outer_atom", to_json(parts.outer.atom)},
                         {"inner_atom", to_json(parts.inner.atom)},
                         {"radius_hint", finite_or_null(fn.radius_hint)},
                         {"ray_angle", config.ray_angle},
                         {"t", ray},
                         {"U", complex_array(values)}};
    return report.dump() + "\n";
  }
  std::string out = "t,re_u,im_u\n";
  for (std::size_t i = 0; i < config.ray_points; ++i)
    out += fmt::format("{},{},{}\n", real(t[i]), real(values[i].real()), real(values[i].imag()));
  return out;
}

void emit(const std::string& text, const RunConfig& config, std::ostream& fallback) {
  if (config.out.empty()) {
    fallback << text;
    if (!fallback) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) throw IoError("cannot open output file " + config.out);
  file << text;
  if (!file) throw IoError("failed writing " + config.out);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inner-outer factorisation and number-phase statistics of oscillator states",
               "phasefact"};
  app.require_subcommand(1);

  RunConfig config;
  std::string spec_path, inline_json, format_text, weyl_text;
  std::size_t n_max = 0;

  const auto add_common = [&](CLI::App* sub, bool takes_state) {
    sub->add_option("--n", config.truncation, "Fock truncation N")->capture_default_str();
    sub->add_option("--grid", config.grid, "boundary grid size M (power of two, >= 2N)")
        ->capture_default_str();
    sub->add_option("--outer-tol", config.outer_tol, "outer-defect tolerance")->capture_default_str();
    sub->add_option("--edge-margin", config.edge_margin, "unit-circle margin for zero reporting")
        ->capture_default_str();
    sub->add_option("--format", format_text, "csv or json");
    sub->add_option("--out", config.out, "output file (default stdout)");
    if (takes_state) {
      sub->add_option("--spec", spec_path, "state spec JSON file");
      sub->add_option("--json", inline_json, "inline state spec JSON");
      sub->add_option("--weyl", weyl_text, "apply W(m,beta,gamma) given as m:beta:gamma");
    }
  };

  auto* state_cmd = app.add_subcommand("state", "dump Fock coefficients");
  auto* factor_cmd = app.add_subcommand("factor", "inner-outer factorisation report");
  auto* phase_cmd = app.add_subcommand("phase-dist", "boundary function and phase distribution");
  auto* wigner_cmd = app.add_subcommand("wigner", "number-phase Wigner function");
  auto* bg_cmd = app.add_subcommand("bg", "Barut-Girardello function along a ray");
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant catalog");
  for (auto* sub : {state_cmd, factor_cmd, phase_cmd, wigner_cmd, bg_cmd}) add_common(sub, true);
  add_common(verify_cmd, false);
  wigner_cmd->add_option("--n-max", n_max, "largest n row (default N-1)");
  bg_cmd->add_option("--angle", config.ray_angle, "ray direction arg(u)")->capture_default_str();
  bg_cmd->add_option("--t-max", config.t_max, "ray length")->capture_default_str();
  bg_cmd->add_option("--points", config.ray_points, "samples along the ray")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSpecError;
  }

  try {
    config.format = parse_format(format_text);
    if (!weyl_text.empty()) config.weyl = parse_weyl(weyl_text);
    if (wigner_cmd->count("--n-max") > 0) config.n_max = n_max;
    validate(config);

    if (verify_cmd->parsed()) {
      const auto results = run_catalog(config);
      emit(format_catalog(results, config.format), config, out);
      const bool all = std::all_of(results.begin(), results.end(),
                                   [](const CheckResult& r) { return r.passed; });
      return all ? kOk : kChecksFailed;
    }

    FockState state = parse_state(load_spec(spec_path, inline_json), config.truncation);
    if (config.weyl) state = apply(*config.weyl, state);

    std::string text;
    if (state_cmd->parsed()) text = cmd_state(state, config);
    else if (factor_cmd->parsed()) text = cmd_factor(state, config);
    else if (phase_cmd->parsed()) text = cmd_phase_dist(state, config);
    else if (wigner_cmd->parsed()) text = cmd_wigner(state, config);
    else text = cmd_bg(state, config);
    emit(text, config, out);
    return kOk;
  } catch (const SpecError& e) {
    err << "spec error: " << e.what() << "\n";
    return kSpecError;
  } catch (const json::exception& e) {
    err << "spec error: " << e.what() << "\n";
    return kSpecError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const NumericError& e) {
    err << "numeric precondition failed: " << e.what() << "\n";
    return kNumericError;
  }
}

}  // namespace phasefact::cli
