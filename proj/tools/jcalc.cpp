#include <iostream>
#include <string>
#include <vector>

#include "jcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jcalc::cli::run(args, std::cout, std::cerr);
}
