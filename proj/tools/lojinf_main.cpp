#include <iostream>

#include "lojinf/cli.hpp"

int main(int argc, char** argv) { return lojinf::cli::run(argc, argv, std::cout, std::cerr); }
