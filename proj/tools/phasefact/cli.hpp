#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "phasefact/factorization.hpp"
#include "phasefact/fock_state.hpp"
#include "phasefact/weyl.hpp"

namespace phasefact::cli {

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kSpecError = 2, kNumericError = 3, kIoError = 4 };

// Malformed state spec or invalid run configuration.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { automatic, csv, json };

struct RunConfig {
  std::size_t truncation = 64;
  std::size_t grid = 512;
  double outer_tol = 1e-6;
  double edge_margin = 1e-3;
  Format format = Format::automatic;
  std::string out;  // empty: stdout
  std::optional<WeylElement> weyl;

  // wigner
  std::optional<std::size_t> n_max;  // default N - 1
  // bg
  double ray_angle = 0.0;
  double t_max = 5.0;
  std::size_t ray_points = 101;
};

/// Throws SpecError for N = 0 or non-positive tolerances and AliasingError
/// (a numeric precondition) when M < 2N or M is not a power of two.
void validate(const RunConfig& config);

Format parse_format(const std::string& text);

/// "m:beta:gamma".
WeylElement parse_weyl(const std::string& text);

/// Complex number from a [re, im] array or a bare real.
cplx parse_complex(const nlohmann::json& value);
nlohmann::json to_json(cplx value);

/// Builds a state from a JSON spec. Kinds: number, number_out, su11_cs, bg,
/// blaschke, pi_superposition, raw, superpose. Throws SpecError.
FockState parse_state(const nlohmann::json& spec, std::size_t truncation);

/// Reads a spec from a file path or an inline JSON string (exactly one).
nlohmann::json load_spec(const std::string& spec_path, const std::string& inline_json);

nlohmann::json factor_report(const FactoredState& factored, double outer_tol);

std::string cmd_state(const FockState& state, const RunConfig& config);
std::string cmd_factor(const FockState& state, const RunConfig& config);
std::string cmd_phase_dist(const FockState& state, const RunConfig& config);
std::string cmd_wigner(const FockState& state, const RunConfig& config);
std::string cmd_bg(const FockState& state, const RunConfig& config);

/// Writes `text` to config.out, or to `fallback` when out is empty. Throws IoError.
void emit(const std::string& text, const RunConfig& config, std::ostream& fallback);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phasefact::cli
