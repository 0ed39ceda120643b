#include <iostream>
#include <string>
#include <vector>

#include "surfgenus/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return surfgenus::run(args, std::cout, std::cerr);
}
