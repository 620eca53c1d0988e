#pragma once

#include <string>

namespace notoph {

enum class CheckStatus { pass, fail, info };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "info";
  }
}

/// One verification record. Pass/fail checks hold max_abs_error <= tolerance
/// iff status == pass; info records report values without asserting anything.
struct CheckReport {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::info;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  std::string details;
};

inline CheckReport make_check(std::string id, std::string description, double err, double tol,
                              std::string details = {}) {
  CheckReport r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.max_abs_error = err;
  r.tolerance = tol;
  r.status = err <= tol ? CheckStatus::pass : CheckStatus::fail;
  r.details = std::move(details);
  return r;
}

inline CheckReport make_info(std::string id, std::string description, std::string details) {
  CheckReport r;
  r.id = std::move(id);
  r.description = std::move(description);
  r.status = CheckStatus::info;
  r.details = std::move(details);
  return r;
}

}  // namespace notoph
