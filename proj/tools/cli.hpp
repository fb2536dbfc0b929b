#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibfull::cli {

/// Runs one fibfull command. args excludes the program name. Returns the
/// process exit code: 0 success, 1 input error, 2 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibfull::cli
