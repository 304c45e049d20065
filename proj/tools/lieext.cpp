#include <iostream>

#include "lieext/cli.hpp"

int main(int argc, char** argv) { return lieext::cli_main(argc, argv, std::cout, std::cerr); }
