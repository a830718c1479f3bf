#include <iostream>

#include "gemforge/cli.hpp"

int main(int argc, char** argv) { return gemforge::run_cli(argc, argv, std::cout, std::cerr); }
