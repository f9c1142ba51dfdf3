#pragma once

#include <span>
#include <string>
#include <vector>

namespace hurwitz::cli {

struct RunResult {
  int exit_code = 0;
  std::string output;  ///< serialized report (JSON or CSV), or help text
};

/// Runs one command line. `args` excludes the program name. Never throws:
/// errors are reported in the output and encoded in the exit code
/// (0 ok, 1 usage, 2 domain, 3 verification failure).
RunResult run(std::span<const std::string> args);

/// Convenience overload for main().
RunResult run(int argc, const char* const* argv);

}  // namespace hurwitz::cli
