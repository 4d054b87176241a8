#include <iostream>

#include "sl2voa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sl2voa::cli::run(args, std::cout, std::cerr);
}
