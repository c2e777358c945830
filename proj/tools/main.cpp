#include <iostream>

#include "ks/cli.hpp"

int main(int argc, char** argv) {
  return ks::cli::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
