// Acceptance suite: one PASS/FAIL line per criterion. Criteria 1-8 aggregate
// the invariant catalog; criterion 9 times the `verify` subcommand end to end.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "verify.hpp"

namespace {

const char* const kTitles[] = {
    "",
    "factorisation reconstruction",
    "outer-criterion classifier",
    "inner criteria",
    "zero extraction",
    "Weyl algebra",
    "Barut-Girardello bridge",
    "Wigner suite",
    "kernel limits",
    "verify runtime under 60 s",
};

}  // namespace

int main() {
  using phasefact::cli::CheckResult;
  const phasefact::cli::RunConfig config;  // N = 64, M = 512

  std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
  std::map<int, std::string> first_failure;
  const auto results = phasefact::cli::run_catalog(config);
  for (const CheckResult& r : results) {
    auto& [passed, total] = tally[r.criterion];
    ++total;
    if (r.passed) {
      ++passed;
    } else if (!first_failure.count(r.criterion)) {
      first_failure[r.criterion] = r.name + " residual " + std::to_string(r.residual) +
                                   (r.note.empty() ? "" : " (" + r.note + ")");
    }
  }

  bool all = true;
  for (int c = 1; c <= 8; ++c) {
    const auto [passed, total] = tally[c];
    const bool ok = total > 0 && passed == total;
    all = all && ok;
    std::printf("criterion %d %s: %s (%d/%d checks)%s%s\n", c, kTitles[c], ok ? "PASS" : "FAIL", passed,
                total, ok ? "" : " first failure: ", ok ? "" : first_failure[c].c_str());
  }

  const std::string command = std::string("\"") + PHASEFACT_EXE + "\" verify --out /dev/null";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(command.c_str());
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok9 = status == 0 && seconds < 60.0;
  all = all && ok9;
  std::printf("criterion 9 %s: %s (%.2f s, exit status %d)\n", kTitles[9], ok9 ? "PASS" : "FAIL", seconds,
              status);

  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
