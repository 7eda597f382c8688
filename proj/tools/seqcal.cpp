#include <iostream>

#include "seqcal/cli.hpp"

int main(int argc, char** argv) { return seqcal::cli_main(argc, argv, std::cout, std::cerr); }
