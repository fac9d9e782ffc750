#include <iostream>

#include "ks/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ks::run_command(args, std::cout);
}
