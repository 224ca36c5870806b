#include <iostream>
#include <string>
#include <vector>

#include "cubealg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cubealg::run_cli(args, std::cout, std::cerr);
}
