#include <iostream>

#include "newform_weyl/cli/cli.hpp"

int main(int argc, char** argv) { return nw::cli::run(argc, argv, std::cout, std::cerr); }
