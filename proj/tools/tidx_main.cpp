#include <iostream>

#include "tidx/cli.hpp"

int main(int argc, char** argv) { return tidx::run_cli(argc, argv, std::cout, std::cerr); }
