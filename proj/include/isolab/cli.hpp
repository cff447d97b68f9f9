#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "isolab/io.hpp"

namespace isolab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct CommandRequest {
  std::string subcommand;
  /// Option name without dashes to raw value; flags map to "true".
  std::map<std::string, std::string> params;
  Format format = Format::Text;
  std::optional<std::string> out_path;
  std::optional<int> threads;
  std::optional<std::uint64_t> budget;
  std::optional<double> tolerance;
};

/// Exit status for a finished report: 3 when inexact, else 1 on any failed
/// check, else 0.
int report_exit_code(const AuditReport& report);

/// Runs one subcommand and writes its report to `out` (or the request's
/// output path). Returns 0 when every check passes, 1 when a check fails,
/// 2 on a usage error and 3 when a budget ran out before the result was exact.
int execute(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// Parses argv into a request and executes it; --help prints usage and returns 0.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isolab
