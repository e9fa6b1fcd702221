#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinent::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Full command line including the program name in args[0]. Results go to
// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinent::cli
