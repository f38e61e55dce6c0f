#pragma once

#include <iosfwd>

namespace rstar::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;
inline constexpr int kVerifyMismatch = 3;

// Runs the command line (argv[0] is the program name) writing results to out
// and diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rstar::cli
