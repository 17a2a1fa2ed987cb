#include <iostream>

#include "extlat/cli.hpp"

int main(int argc, char** argv) { return extlat::run_cli(argc, argv, std::cout, std::cerr); }
