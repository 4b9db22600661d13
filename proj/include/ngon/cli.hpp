#pragma once

#include <string>
#include <vector>

namespace ngon::cli {

struct CommandResult {
  /// 0 holds, 1 fails with a witness, 2 input error.
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command. args excludes the program name, e.g.
/// {"delta", "g.txt", "A"}. Never throws.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace ngon::cli
