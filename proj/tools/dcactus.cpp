#include <iostream>

#include "dcactus/cli.hpp"

int main(int argc, char** argv) {
  return dcactus::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
