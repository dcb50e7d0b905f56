#include <iostream>

#include "hooklab/cli.hpp"

int main(int argc, char** argv) { return hooklab::run_cli(argc, argv, std::cout, std::cerr); }
