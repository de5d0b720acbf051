#include <iostream>

#include "flatcx/cli.hpp"

int main(int argc, char** argv) {
  return flatcx::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
