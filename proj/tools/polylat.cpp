#include <iostream>

#include "polylat/cli/app.hpp"

int main(int argc, char** argv) { return polylat::cli::run(argc, argv, std::cout, std::cerr); }
