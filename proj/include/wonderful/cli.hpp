#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wonderful {

inline constexpr const char* kVersion = "0.3.0";

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int verify_failed = 1;
inline constexpr int invalid_input = 2;
inline constexpr int cap_exceeded = 3;
inline constexpr int cross_check = 4;
}  // namespace exit_code

/// Runs the command line; args[0] is the program name. Output is produced only
/// once the whole result has been computed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wonderful
