#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hardy/error.hpp"

namespace hardy {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidArgs = 2,
    kExitBadInput = 3,
    kExitNumericFailure = 4,
};

[[nodiscard]] int exit_code(ErrorKind kind) noexcept;

/// Runs one CLI invocation; args excludes the program name. Reports go to
/// out (unless --out is given), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardy
