#include <iostream>
#include <string>
#include <vector>

#include "gon/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return gon::run_command(args, std::cout, std::cerr);
}
