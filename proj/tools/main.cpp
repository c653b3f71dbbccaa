#include <iostream>

#include "simplexion/cli.hpp"

int main(int argc, char** argv) { return simplexion::run_cli(argc, argv, std::cout, std::cerr); }
