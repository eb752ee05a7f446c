#include <iostream>

#include "tegdet/cli.hpp"

int main(int argc, char** argv) { return tegdet::cli::run(argc, argv, std::cout, std::cerr); }
