#include <iostream>

#include "kuga/cli.hpp"

int main(int argc, char** argv) { return kuga::run_cli(argc, argv, std::cout, std::cerr); }
