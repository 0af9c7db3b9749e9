#include <iostream>

#include "stal/cli.hpp"

int main(int argc, char** argv) {
  return stal::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
