#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz_cli/report.hpp"

namespace hurwitz::cli {

struct SuiteOptions {
  std::optional<int> max;  ///< suite-specific size bound; nullopt selects the default
  std::uint64_t seed = 1;
  int samples = 200;       ///< random points per size for evaluation checks
};

struct SuiteResult {
  std::string suite;
  int max = 0;
  bool passed = true;
  long checks_run = 0;
  std::vector<Check> checks;
  Json counterexample;  ///< null unless a check failed; holds the first failure
};

/// Suite names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

/// Runs one verification suite. Throws ParseError for an unknown suite and
/// ResourceError/DomainError when `max` is outside the suite's range.
SuiteResult run_suite(std::string_view suite, const SuiteOptions& options);

}  // namespace hurwitz::cli
