#include <iostream>
#include <string>
#include <vector>

#include "grouplaw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grouplaw::cli::run(std::move(args), std::cout, std::cerr);
}
