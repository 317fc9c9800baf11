#include "conewb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return conewb::run_cli(argc, argv, std::cout, std::cerr); }
