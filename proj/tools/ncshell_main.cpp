#include <iostream>
#include <string>
#include <vector>

#include "ncp/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ncp::run(args, std::cout);
}
