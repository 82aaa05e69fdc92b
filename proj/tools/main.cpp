#include <iostream>

#include "burnside/cli.hpp"

int main(int argc, char** argv) { return burnside::cli::main_with_args(argc, argv, std::cout, std::cerr); }
