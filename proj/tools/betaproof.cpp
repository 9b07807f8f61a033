#include "betaproof/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return betaproof::cli::run(argc, argv, std::cout, std::cerr); }
