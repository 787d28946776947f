#include <iostream>
#include <string>
#include <vector>

#include "gainsw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gainsw::cli::run(std::move(args), std::cout, std::cerr);
}
