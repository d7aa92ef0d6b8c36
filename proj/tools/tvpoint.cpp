#include <iostream>

#include "tvpoint/cli.hpp"

int main(int argc, char** argv) { return tvpoint::cli::run(argc, argv, std::cout, std::cerr); }
