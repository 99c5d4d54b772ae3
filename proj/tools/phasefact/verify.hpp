#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace phasefact::cli {

struct CheckResult {
  int criterion = 0;  // acceptance criterion the check belongs to
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  double seconds = 0.0;
  std::string note;
};

/// Runs the invariant catalog. `progress`, when set, is called after each check.
std::vector<CheckResult> run_catalog(const RunConfig& config,
                                     const std::function<void(const CheckResult&)>& progress = {});

std::string format_catalog(const std::vector<CheckResult>& results, Format format);

nlohmann::json catalog_json(const std::vector<CheckResult>& results);

}  // namespace phasefact::cli
