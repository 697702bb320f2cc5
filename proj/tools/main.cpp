#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const char* cap = std::getenv("ICE_CRYSTAL_NODE_CAP");
  return icecrystal::cli::run({argv + 1, argv + argc}, std::cout, std::cerr, cap ? cap : "");
}
