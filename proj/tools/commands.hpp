#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace valueset::cli {

inline constexpr const char* kToolVersion = "valueset 0.1.0";

// Exit codes: 0 all asserted properties hold, 1 a property was violated,
// 2 bad input or refused computation.
enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2 };

// Runs one subcommand. The JSON report goes to `out` (and to --out when set);
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valueset::cli
