#pragma once

#include <ostream>

namespace gemforge {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagreement = 3;

/// Entry point of the `gemforge` tool, kept in the library so tests can drive it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gemforge
