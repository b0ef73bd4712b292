#include <iostream>
#include <string>
#include <vector>

#include "ptile/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ptile::cli::run(args, std::cout, std::cerr);
}
