#include <iostream>

#include "solenoid/tools/cli.hpp"

int main(int argc, char** argv) { return solenoid::cli::run(argc, argv, std::cout, std::cerr); }
