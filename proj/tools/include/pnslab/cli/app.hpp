#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnslab::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitViolated = 1; // theorem violated, or inverse absent under --expect-present
inline constexpr int kExitUsage = 2;    // bad arguments or unparsable input

// Runs one command line (args excludes the program name) and returns its exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pnslab::cli
