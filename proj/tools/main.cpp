#include <iostream>

#include "hypereuler/cli.hpp"

int main(int argc, char** argv) { return hypereuler::cli::run(argc, argv, std::cout, std::cerr); }
