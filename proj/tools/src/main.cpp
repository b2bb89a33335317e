#include <iostream>

#include "oafd_cli/commands.hpp"

int main(int argc, char** argv) { return oafd::cli::run_cli(argc, argv, std::cout, std::cerr); }
