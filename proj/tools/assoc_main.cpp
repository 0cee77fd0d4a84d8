#include "assoc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return assoc::cli::run(argc, argv, std::cout, std::cerr); }
