#include <iostream>
#include <string>
#include <vector>

#include "lietrees/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lietrees::run_cli(args, std::cout, std::cerr);
}
