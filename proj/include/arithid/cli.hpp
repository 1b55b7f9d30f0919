#pragma once

#include <iosfwd>

namespace arithid {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,  ///< at least one identity failed
    kExitUsage = 2,      ///< bad flags, unknown selectors, out-of-domain input
    kExitGuard = 3,      ///< residual guard or overflow guard tripped
};

/// Entry point for `arithid eval|verify|bench|list`. Normal output goes to out,
/// diagnostics and usage text to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace arithid
