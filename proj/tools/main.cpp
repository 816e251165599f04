#include <iostream>

#include "compreco/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return compreco::run(args, std::cout, std::cerr, std::cin);
}
