#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mecsbox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParamError = 2;
inline constexpr int kExitFormatError = 3;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mecsbox::cli
