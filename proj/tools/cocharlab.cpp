#include <iostream>

#include "cocharlab/cli.hpp"

int main(int argc, char** argv) {
  return cocharlab::run_cli(argc, argv, std::cout, std::cerr);
}
