#pragma once

// Command-line entry point. Exit codes: 0 success, 2 usage error,
// 3 validation error, 4 numeric or I/O failure. Failures print a single
// "error[<kind>]: <message>" line to `err`.

#include <iosfwd>
#include <string>
#include <vector>

namespace graphcost {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitNumeric = 4;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphcost
