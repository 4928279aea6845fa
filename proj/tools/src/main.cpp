#include <iostream>

#include "ekchains_cli/commands.hpp"

int main(int argc, char** argv) { return ekcli::run_cli(argc, argv, std::cout, std::cerr); }
