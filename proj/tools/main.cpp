#include <iostream>
#include <string>
#include <vector>

#include "rostkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rostkit::cli::run(args, std::cout, std::cerr);
}
