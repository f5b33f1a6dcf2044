#include <iostream>
#include <string>
#include <vector>

#include "hofer/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hofer::cli::run(args, std::cout, std::cerr);
}
