#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  auto result = harmonic::cli::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
