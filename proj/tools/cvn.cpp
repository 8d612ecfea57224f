#include <iostream>

#include "cvn/cli.hpp"

int main(int argc, char** argv) { return cvn::run_cli(argc, argv, std::cout, std::cerr); }
