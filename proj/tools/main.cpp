#include <iostream>

#include "fusionlab/cli.hpp"

int main(int argc, char** argv) {
  return fusionlab::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
