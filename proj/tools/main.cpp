#include <iostream>

#include "calogero/cli.hpp"

int main(int argc, char** argv) {
  return calogero::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
