#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cofin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  char const* mode = std::getenv(cofin::cli::output_env_var);
  bool const json_default = mode && std::string(mode) == "json";
  return cofin::cli::run_command(std::move(args), {std::cin, std::cout, std::cerr}, json_default);
}
