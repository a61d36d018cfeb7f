#include <iostream>
#include <string>
#include <vector>

#include "gradvar/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return gradvar::cli::run(args, std::cout, std::cerr);
}
