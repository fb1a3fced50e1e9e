#include <iostream>

#include "frameforge/commands.hpp"

int main(int argc, char** argv) { return frameforge::cli_main(argc, argv, std::cout, std::cerr); }
