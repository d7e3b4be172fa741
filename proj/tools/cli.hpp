#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sugartax::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitOracleFailed = 3;

/// Entry point behind the `sugartax` binary; args exclude the program name.
/// Reports go to --out when given, otherwise to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sugartax::cli
