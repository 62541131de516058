#include <iostream>

#include "rfa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rfa::cli::run(args, std::cout, std::cerr);
}
