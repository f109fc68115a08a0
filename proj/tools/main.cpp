#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return tvsb::cli::run_cli(argc, argv, std::cout, std::cerr); }
