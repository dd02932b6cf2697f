#include <iostream>

#include "cnotsynth/cli.hpp"

int main(int argc, char** argv) { return cnotsynth::run_cli(argc, argv, std::cout, std::cerr); }
