#include <iostream>

#include "locsys/cli.hpp"

int main(int argc, char** argv) { return locsys::cli::run(argc, argv, std::cout, std::cerr); }
