#include <iostream>

#include "hurwitz_cli/cli.hpp"

int main(int argc, char** argv) {
  const auto result = hurwitz::cli::run(argc, argv);
  std::cout << result.output;
  return result.exit_code;
}
