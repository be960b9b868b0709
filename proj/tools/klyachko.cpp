#include <iostream>
#include <string>
#include <vector>

#include "klyachko/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return klyachko::cli::run(args, std::cout, std::cerr);
}
