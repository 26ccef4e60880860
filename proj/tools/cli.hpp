#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fintop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPropertyFailure = 2;

/// Runs one subcommand. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fintop::cli
