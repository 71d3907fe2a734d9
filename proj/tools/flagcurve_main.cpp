#include <iostream>

#include "flagcurve/cli/commands.hpp"

int main(int argc, char** argv) { return flagcurve::cli::run_cli(argc, argv, std::cout, std::cerr); }
