#include <iostream>

#include "ospo/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ospo::run(args, std::cout, std::cerr);
}
