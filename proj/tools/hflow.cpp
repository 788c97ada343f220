#include <iostream>

#include "hflow/cli.hpp"

int main(int argc, char** argv) { return hflow::run_cli(argc, argv, std::cout, std::cerr); }
