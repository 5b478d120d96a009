#include <iostream>
#include <string>
#include <vector>

#include "pelljeru/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return pelljeru::cli::main(args, std::cout, std::cerr);
}
