#include <iostream>

#include "gabor/cli.hpp"

int main(int argc, char** argv) { return gabor::run_cli(argc, argv, std::cout, std::cerr); }
