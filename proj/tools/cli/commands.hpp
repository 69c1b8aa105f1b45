#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdlie::cli {

inline constexpr const char* kReportSchema = "mdlie.report/1";

enum ExitCode : int { kExitValid = 0, kExitInvalid = 1, kExitUsage = 2 };

/// Runs one subcommand. `args` excludes the program name. The JSON report
/// goes to `out`; diagnostics and usage errors go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdlie::cli
