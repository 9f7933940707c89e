// Command-line surface: simulate-rancher, simulate-investor,
// estimate-exponent, drift-check, plot. Exposed as a function so tests can
// drive commands in-process.

#ifndef RANCHER_CLI_HPP
#define RANCHER_CLI_HPP

#include <string>
#include <vector>

namespace rancher::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 usage error (bad flags / malformed input),
// 2 I/O error, 3 internal or validation failure.
int run(int argc, const char* const* argv);

// Convenience for tests: argv without the program name.
int run(const std::vector<std::string>& args);

}  // namespace rancher::cli

#endif
