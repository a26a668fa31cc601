#include <iostream>

#include "cspsieve/cli.hpp"

int main(int argc, char** argv) {
    return cspsieve::cli::run(argc, argv, std::cout, std::cerr);
}
