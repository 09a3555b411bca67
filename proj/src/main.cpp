#include "coxfs/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return coxfs::run_cli(argc, argv, std::cout, std::cerr); }
