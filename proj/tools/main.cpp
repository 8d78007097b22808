#include <iostream>
#include <string>
#include <vector>

#include "guidepost/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return guidepost::run_cli(args, std::cout, std::cerr);
}
