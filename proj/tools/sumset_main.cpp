#include <iostream>
#include <string>
#include <vector>

#include "sumset/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sumset::cli::run(args, std::cout, std::cerr);
}
