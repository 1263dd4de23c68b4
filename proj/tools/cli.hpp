#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbern::cli {

enum ExitCode : int {
  kSuccess = 0,
  kRefuted = 1,
  kInconclusive = 2,
  kUsage = 64,
  kInternal = 70,
};

/// args excludes the program name. Input is read from the named spec file, or
/// from `in` when the path is absent or "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace sbern::cli
