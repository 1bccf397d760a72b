#include <iostream>

#include "platkit/cli.hpp"

int main(int argc, char** argv) {
  return platkit::cli::run(argc, argv, std::cout, std::cerr);
}
