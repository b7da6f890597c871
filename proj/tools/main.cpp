#include "pellrep/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_cap;
  if (const char* v = std::getenv(pellrep::kPrecisionCapEnv)) env_cap = v;
  return pellrep::cli_main(args, std::cout, std::cerr, env_cap);
}
