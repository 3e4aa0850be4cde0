#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betashift::cli {

// Exit codes: 0 success, 1 domain error (or a failed oracle check), 2 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betashift::cli
