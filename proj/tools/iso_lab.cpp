#include <iostream>

#include "isolab/cli.hpp"

int main(int argc, char** argv) { return isolab::run(argc, argv, std::cout, std::cerr); }
