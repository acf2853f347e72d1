#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigmalab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUndecided = 2;  // also usage errors

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns the process exit status.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigmalab::cli
