#include <iostream>

#include "linearr/cli.hpp"

int main(int argc, char** argv) { return linearr::run_cli(argc, argv, std::cout, std::cerr); }
