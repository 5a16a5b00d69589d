#include <iostream>
#include <string>
#include <vector>

#include "oscform/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return oscform::run_cli(args, std::cin, std::cout, std::cerr);
}
