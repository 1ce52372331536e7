#pragma once

#include <iosfwd>

namespace snorm::cli {

// Process exit codes: 0 when every assertion passes, 1 on any failure or
// error, 2 for an unknown verify suite, 3 when a table was truncated by the
// runtime budget (emitted rows are still trustworthy).
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUnknownSuite = 2;
inline constexpr int kExitBudgetTruncated = 3;

// Full command-line driver; reads nothing from the real stdin/stdout so
// tests can capture both streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace snorm::cli
