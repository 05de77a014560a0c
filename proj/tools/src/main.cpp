#include <iostream>

#include "mdprod_cli/commands.hpp"

int main(int argc, char** argv) { return mdprod::cli::run(argc, argv, std::cout, std::cerr); }
