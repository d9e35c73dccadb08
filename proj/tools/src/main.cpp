#include <iostream>

#include "leewb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return leewb::run_cli(args, std::cout, std::cerr);
}
