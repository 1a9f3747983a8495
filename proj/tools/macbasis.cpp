#include <iostream>

#include "macaulay/cli.hpp"

int main(int argc, char** argv) { return macaulay::cli::run(argc, argv, std::cout, std::cerr); }
