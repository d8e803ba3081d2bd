#include <iostream>

#include "tmspline/cli.hpp"

int main(int argc, char** argv) { return tmspline::run_cli(argc, argv, std::cout, std::cerr); }
