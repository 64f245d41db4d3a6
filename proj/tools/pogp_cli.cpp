#include <iostream>
#include <string>
#include <vector>

#include "pogp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pogp::cli::run(args, std::cout, std::cerr);
}
