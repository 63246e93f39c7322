#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace gibberline::cli {

inline constexpr int kExitHuman = 0;
inline constexpr int kExitGenerated = 1;
inline constexpr int kExitError = 2;

// Entry point shared by the executable and the tests. args[0] is the
// program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gibberline::cli
