#include <iostream>
#include <vector>

#include "cwords/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cwords::cli::run(args, std::cout, std::cerr);
}
