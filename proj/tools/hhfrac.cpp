#include <iostream>

#include "hhfrac/cli.hpp"

int main(int argc, char** argv) { return hhfrac::cli_main(argc, argv, std::cout, std::cerr); }
