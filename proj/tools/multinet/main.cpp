#include <iostream>
#include <string>
#include <vector>

#include "multinet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return multinet::cli::dispatch(args, std::cout, std::cerr);
}
