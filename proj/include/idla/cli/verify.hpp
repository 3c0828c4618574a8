#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace idla::cli {

struct CheckResult {
  std::string suite;
  std::string check;
  bool passed = false;
  /// Counterexample on failure; otherwise a short note (may be empty).
  std::string detail;
};

/// Suite names accepted by run_suite, in execution order for "all".
const std::vector<std::string>& suite_names();

/// Runs one suite ("eulerian", "genfun", "chain", "biased") or every suite
/// ("all"). Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(std::string_view suite);

}  // namespace idla::cli
