#include <iostream>

#include "fillscope/cli.hpp"

int main(int argc, char** argv) { return fillscope::run(argc, argv, std::cout, std::cerr); }
