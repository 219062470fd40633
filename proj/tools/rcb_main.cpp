#include <iostream>

#include "rcb/cli.hpp"

int main(int argc, char** argv) { return rcb::cli::main_entry(argc, argv, std::cout, std::cerr); }
