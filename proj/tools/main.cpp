#include <iostream>

#include "zolo/cli.hpp"

int main(int argc, char** argv) { return zolo::cli::run(argc, argv, std::cout, std::cerr); }
