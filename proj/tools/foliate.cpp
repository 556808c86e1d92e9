#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return foliate::run(argc, argv, std::cout, std::cerr); }
