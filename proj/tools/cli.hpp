// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricdec::cli {

inline constexpr int kExitUsage = 64;

/// Runs one command line (args[0] is the program name). Reports go to `out`
/// (or to --output), diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toricdec::cli
