#include <iostream>
#include <string>
#include <vector>

#include "betashift/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return betashift::cli::run(args, std::cout, std::cerr);
}
