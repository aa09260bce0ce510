#include <iostream>

#include "skeleta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skeleta::run(args, std::cout, std::cerr);
}
