#include <iostream>

#include "egroupoid/cli.hpp"

int main(int argc, char** argv) {
  return egroupoid::run_cli(argc, argv, std::cout, std::cerr);
}
