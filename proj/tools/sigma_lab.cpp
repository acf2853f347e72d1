#include <iostream>
#include <string>
#include <vector>

#include "sigmalab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sigmalab::cli::dispatch(args, std::cout, std::cerr);
}
