#include <iostream>

#include "bmw/shell.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bmw::run(args, std::cout, std::cerr);
}
