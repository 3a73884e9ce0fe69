#include <iostream>

#include "veronese/cli.hpp"

int main(int argc, char** argv) { return veronese::cli::run(argc, argv, std::cout, std::cerr); }
