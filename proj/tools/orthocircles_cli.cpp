#include <iostream>

#include "orthocircles/cli.hpp"

int main(int argc, char** argv) { return orthocircles::run_cli(argc, argv, std::cout, std::cerr); }
