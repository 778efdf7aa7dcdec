// Command-line front end.  Every subcommand prints one JSON document with an
// embedded run manifest.  Exit codes: 0 success, 2 bad input, 3 a check
// found a contract violation.

#ifndef SINGTUPLE_TOOLS_CLI_H_
#define SINGTUPLE_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace singtuple::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitViolation = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace singtuple::cli

#endif  // SINGTUPLE_TOOLS_CLI_H_
