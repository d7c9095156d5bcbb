#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arrcover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUnresolved = 2;

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace arrcover::cli
