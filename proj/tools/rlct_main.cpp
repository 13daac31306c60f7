#include <iostream>
#include <string>
#include <vector>

#include "rlct/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rlct::cli::run(args, std::cout, std::cerr);
}
