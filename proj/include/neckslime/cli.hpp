#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace neckslime::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;  // verification failed or a mathematical precondition does not hold
inline constexpr int kUsage = 2;   // bad arguments or unparsable literals

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace neckslime::cli
