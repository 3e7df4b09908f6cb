#include <iostream>
#include <string>
#include <vector>

#include "codecalc_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return codecalc::cli::run(args, std::cout, std::cerr);
}
