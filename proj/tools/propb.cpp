#include <iostream>

#include "propb/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return propb::cli::main(argc, argv, std::cout, std::cerr);
}
