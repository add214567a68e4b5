#include <iostream>

#include "crystalvor/cli.hpp"

int main(int argc, char** argv) { return crystalvor::run(argc, argv, std::cout, std::cerr); }
