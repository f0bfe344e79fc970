#include "odograph/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return odograph::run_cli(argc, argv, std::cout, std::cerr); }
