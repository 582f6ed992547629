#include <iostream>

#include "cpvi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cpvi::run_cli(args, std::cout, std::cerr);
}
