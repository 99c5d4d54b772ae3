#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "phasefact/disk_analytic.hpp"
#include "phasefact/errors.hpp"

namespace phasefact::cli {

using nlohmann::json;

void validate(const RunConfig& config) {
  if (config.truncation < 1) throw SpecError("--n must be at least 1");
  if (!(config.outer_tol > 0.0)) throw SpecError("--outer-tol must be positive");
  if (!(config.edge_margin > 0.0 && config.edge_margin < 1.0))
    throw SpecError("--edge-margin must lie in (0, 1)");
  if (!is_power_of_two(config.grid))
    throw AliasingError("--grid must be a power of two, got " + std::to_string(config.grid));
  if (config.grid < 2 * config.truncation)
    throw AliasingError("--grid " + std::to_string(config.grid) + " is below 2N = " +
                        std::to_string(2 * config.truncation) + "; boundary samples would alias");
  if (config.ray_points < 2) throw SpecError("--points must be at least 2");
  if (!(config.t_max > 0.0)) throw SpecError("--t-max must be positive");
}

Format parse_format(const std::string& text) {
  if (text.empty()) return Format::automatic;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw SpecError("--format must be csv or json, got '" + text + "'");
}

WeylElement parse_weyl(const std::string& text) {
  std::istringstream in(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(in, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw SpecError("--weyl expects m:beta:gamma, got '" + text + "'");
  try {
    std::size_t used = 0;
    const long m = std::stol(parts[0], &used);
    if (used != parts[0].size() || m < 0) throw SpecError("--weyl: m must be a non-negative integer");
    return WeylElement(static_cast<std::size_t>(m), std::stod(parts[1]), std::stod(parts[2]));
  } catch (const std::logic_error&) {
    throw SpecError("--weyl: cannot parse '" + text + "'");
  }
}

cplx parse_complex(const json& value) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number())
    return {value[0].get<double>(), value[1].get<double>()};
  throw SpecError("expected a complex number [re, im], got " + value.dump());
}

json to_json(cplx value) { return json::array({value.real(), value.imag()}); }

namespace {

const json& field(const json& spec, const char* key) {
  if (!spec.contains(key)) throw SpecError(std::string("state spec is missing \"") + key + "\"");
  return spec.at(key);
}

std::size_t index_field(const json& spec, const char* key) {
  const json& v = field(spec, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw SpecError(std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

double real_field(const json& spec, const char* key) {
  const json& v = field(spec, key);
  if (!v.is_number()) throw SpecError(std::string("\"") + key + "\" must be a number");
  return v.get<double>();
}

}  // namespace

FockState parse_state(const json& spec, std::size_t truncation) {
  if (!spec.is_object()) throw SpecError("state spec must be a JSON object");
  const json& kind_value = field(spec, "kind");
  if (!kind_value.is_string()) throw SpecError("\"kind\" must be a string");
  const std::string kind = kind_value.get<std::string>();

  if (kind == "number") return make_number(index_field(spec, "m"), truncation);
  if (kind == "number_out") {
    const std::size_t m = index_field(spec, "m");
    if (m == 0) throw SpecError("number_out needs m >= 1");
    const std::vector<FockState> parts{make_number(0, truncation), make_number(m, truncation)};
    const double a = 1.0 / std::numbers::sqrt2;
    const std::vector<cplx> amps{a, a};
    return superpose(parts, amps);
  }
  if (kind == "su11_cs") return make_su11_cs(parse_complex(field(spec, "z")), truncation);
  if (kind == "bg") return make_bg(parse_complex(field(spec, "u")), truncation);
  if (kind == "blaschke") return make_blaschke_state(parse_complex(field(spec, "z")), truncation);
  if (kind == "pi_superposition")
    return make_pi_superposition(parse_complex(field(spec, "z")), real_field(spec, "tau"), truncation);
  if (kind == "raw") {
    const json& c = field(spec, "coeffs");
    if (!c.is_array() || c.empty()) throw SpecError("\"coeffs\" must be a non-empty array");
    std::vector<cplx> coeffs;
    for (const auto& v : c) coeffs.push_back(parse_complex(v));
    const double defect = spec.contains("norm_defect") ? real_field(spec, "norm_defect") : 0.0;
    return FockState(std::move(coeffs), defect);
  }
  if (kind == "superpose") {
    const json& terms = field(spec, "terms");
    if (!terms.is_array() || terms.empty()) throw SpecError("\"terms\" must be a non-empty array");
    std::vector<FockState> states;
    std::vector<cplx> amps;
    for (const auto& t : terms) {
      states.push_back(parse_state(field(t, "state"), truncation));
      amps.push_back(parse_complex(field(t, "amplitude")));
    }
    return superpose(states, amps);
  }
  throw SpecError("unknown state kind '" + kind + "'");
}

json load_spec(const std::string& spec_path, const std::string& inline_json) {
  if (spec_path.empty() == inline_json.empty())
    throw SpecError("give exactly one of --spec <file> or --json '<spec>'");
  std::string text = inline_json;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw IoError("cannot open spec file " + spec_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON spec: ") + e.what());
  }
}

}  // namespace phasefact::cli
