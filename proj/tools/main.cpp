#include <iostream>
#include <string>
#include <vector>

#include "splitgraph/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return splitgraph::run(args, std::cout, std::cerr);
}
