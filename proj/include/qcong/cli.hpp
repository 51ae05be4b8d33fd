#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcong {

/// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or config error.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitUsage = 2 };

/// Entry point behind the qcong binary. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcong
