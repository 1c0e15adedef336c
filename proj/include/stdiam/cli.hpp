#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stdiam {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitViolation = 3,
  kExitIo = 4,
  kExitMode = 5,
  kExitDirection = 6,
  kExitWeight = 7,
};

/// Subcommands run, verify, oracle, gen and bench. `args` excludes the
/// program name. Reports go to `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace stdiam
