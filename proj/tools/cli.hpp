#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ptlab {

// Exit codes shared by every subcommand.
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 3;   // bad flags, unparsable input
inline constexpr int kExitDomain = 4;  // precondition or input-class violation
inline constexpr int kExitIo = 5;

// Runs one `ptlab` invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptlab
