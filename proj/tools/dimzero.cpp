#include <iostream>
#include <string>
#include <vector>

#include "dimzero/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dimzero::cli::run(args, std::cout, std::cerr);
}
