#include <iostream>

#include "mprod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = mprod::cli::run(args);
  (result.exit_code == mprod::cli::kUsage ? std::cerr : std::cout) << result.output;
  return result.exit_code;
}
