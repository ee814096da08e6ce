#include <iostream>
#include <string>
#include <vector>

#include "ordlim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordlim::run(args, std::cout, std::cerr);
}
