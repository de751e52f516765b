#include <iostream>
#include <string>
#include <vector>

#include "edom/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return edom::run_cli(args, std::cin, std::cout, std::cerr);
}
