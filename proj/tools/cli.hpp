#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewsym::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

// Runs one command line (args excludes the program name) and returns the
// exit status. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace skewsym::cli
