#include <iostream>

#include "gmloci/cli.hpp"

int main(int argc, char** argv) { return gmloci::run_cli(argc, argv, std::cout, std::cerr); }
