#pragma once

#include <string>
#include <vector>

namespace mprod::cli {

  // Exit codes shared by every subcommand.
  inline constexpr int kOk      = 0;  // success, Proved, member, no violations
  inline constexpr int kUsage   = 1;  // usage or input error
  inline constexpr int kUnknown = 2;  // a bound was exhausted
  inline constexpr int kNegative = 3;  // Refuted, not a member, violations found

  struct Result {
    int         exit_code = kOk;
    std::string output;
  };

  // args excludes the program name.
  Result run(std::vector<std::string> const& args);

}  // namespace mprod::cli
