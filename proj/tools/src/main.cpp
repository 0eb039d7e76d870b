#include <iostream>

#include "meropencil_cli/commands.hpp"

int main(int argc, char** argv) { return mero::cli::run(argc, argv, std::cout, std::cerr); }
