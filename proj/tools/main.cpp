#include <iostream>

#include "ahecke/cli.hpp"

int main(int argc, char** argv) { return ahecke::cli::run(argc, argv, std::cout); }
