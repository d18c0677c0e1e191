#include <iostream>
#include <string>
#include <vector>

#include "ltft/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ltft::cli::main_entry(args, std::cout, std::cerr);
}
