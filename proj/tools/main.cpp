#include <iostream>
#include <string>
#include <vector>

#include "pvalid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pvalid::run_cli(args, std::cout, std::cerr);
}
