#include "stir/cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return stir::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
