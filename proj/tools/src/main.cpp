#include <iostream>

#include "ainf/cli.hpp"

int main(int argc, char** argv) { return ainf::cli_dispatch(argc, argv, std::cout, std::cerr); }
