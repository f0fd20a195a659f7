#include <iostream>

#include "cyqw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyqw::run(args, std::cout, std::cerr);
}
