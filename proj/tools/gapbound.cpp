#include <iostream>

#include "gapbound/cli.hpp"

int main(int argc, char** argv) { return gapbound::run_command(argc, argv, std::cout, std::cerr); }
