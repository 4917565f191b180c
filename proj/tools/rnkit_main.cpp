#include <iostream>

#include "rn/cli.hpp"

int main(int argc, char** argv) { return rn::run(argc, argv, std::cout, std::cerr); }
