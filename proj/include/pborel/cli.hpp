#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pborel::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;           // success / verified / Borel-fixed
inline constexpr int kExitParseError = 2;   // malformed ideal file
inline constexpr int kExitBadArgument = 3;  // invalid flag or value
inline constexpr int kExitCheckFailed = 4;  // verification failed / witness found
inline constexpr int kExitOverflow = 5;     // checked arithmetic overflowed

/// Runs the command line given as an argument list (no program name).
/// All output goes to the supplied streams, which makes the frontend
/// testable in-process; main() is a thin wrapper.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pborel::cli
