#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fardiff::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one `fardiff` invocation. `args` excludes the program name.
/// Machine-readable output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fardiff::cli
