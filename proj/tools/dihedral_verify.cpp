#include "dihedral/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return dihedral::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
