#include <iostream>
#include <string>
#include <vector>

#include "qdeform/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qdeform::run(args, std::cout, std::cerr);
}
