#include <iostream>

#include "legkit/cli.hpp"

int main(int argc, char** argv) { return legkit::run_cli(argc, argv, std::cout, std::cerr); }
