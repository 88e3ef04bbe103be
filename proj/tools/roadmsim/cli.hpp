#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roadm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs roadmsim with `args` (program name excluded). Reports go to the files
/// named by --out/--json or to `out`; diagnostics and summaries go to `err`
/// when `out` carries a report. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roadm::cli
