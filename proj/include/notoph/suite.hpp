#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "notoph/polarization.hpp"
#include "notoph/report.hpp"
#include "notoph/strengths.hpp"

namespace notoph {

struct SuiteConfig {
  std::uint64_t seed = 20240915;
  double tol = 1e-12;
  int samples = 100;
  NormScheme norm = NormScheme::mass();  // used by info reports
  ModePhases phases{};                   // conjugate-potential phases per mode

  void validate() const;  // throws std::invalid_argument
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckReport> checks;  // sorted by id
  int passed = 0;
  int failed = 0;
  int info = 0;

  bool all_passed() const { return failed == 0; }
};

/// Runs every module's invariant checks with reproducible per-check random
/// streams derived from config.seed.
SuiteReport run_verify_suite(const SuiteConfig& config);

/// Single self-describing JSON document ("v": 1); identical config and seed
/// give a byte-identical string.
std::string report_to_json(const SuiteReport& report);

/// Inverse of report_to_json; throws std::invalid_argument on malformed input.
SuiteReport report_from_json(const std::string& text);

std::string report_to_text(const SuiteReport& report);

}  // namespace notoph
