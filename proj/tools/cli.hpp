#pragma once

#include <iosfwd>

namespace pratio::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNonConvergence = 3;

/// Entry point shared by the executable and the tests. JSON goes to `out`,
/// diagnostics and timings to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pratio::cli
