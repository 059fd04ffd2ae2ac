#pragma once

#include <ostream>

namespace mixcons::cli {

/// Exit statuses shared by every verb.
inline constexpr int kSuccess = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsageError = 2;

/// Runs one invocation. Kept separate from main so that tests can drive it
/// with string streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mixcons::cli
