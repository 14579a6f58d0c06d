#include <iostream>

#include "skeinlab/cli.hpp"

int main(int argc, char** argv) { return skeinlab::cli::run(argc, argv, std::cout, std::cerr); }
