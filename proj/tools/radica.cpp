#include <iostream>
#include <string>
#include <vector>

#include "radica/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return radica::run(args, std::cout, std::cerr);
}
