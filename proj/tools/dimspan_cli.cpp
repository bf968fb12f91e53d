#include <iostream>

#include "dimspan/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return dimspan::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
