#include <iostream>
#include <string>
#include <vector>

#include "ytwo_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ytwo::cli::run(args, std::cout, std::cerr);
}
