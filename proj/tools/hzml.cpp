#include <iostream>
#include <string>
#include <vector>

#include "hzml/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return hzml::main_entry(args, std::cout, std::cerr);
}
