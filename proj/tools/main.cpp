#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return sectorlab::run_cli(argc, argv, std::cout, std::cerr); }
