#include <iostream>

#include "dmt/cli.hpp"

int main(int argc, char** argv) { return dmt::cli::run(argc, argv, std::cout, std::cerr); }
