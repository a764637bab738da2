#include <iostream>
#include <vector>

#include "soc3/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return soc3::run_cli(args, std::cin, std::cout, std::cerr);
}
