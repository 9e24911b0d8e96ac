#include <iostream>

#include "simplexstep/cli.hpp"

int main(int argc, char** argv) { return simplexstep::run_cli(argc, argv, std::cout, std::cerr); }
