#include <iostream>
#include <string>
#include <vector>

#include "idla/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return idla::cli::run(args, std::cout, std::cerr);
}
