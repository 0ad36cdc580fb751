#include <iostream>

#include "invheat/cli/commands.hpp"

int main(int argc, char** argv) { return invheat::cli::run(argc, argv, std::cout, std::cerr); }
