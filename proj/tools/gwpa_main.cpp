#include <iostream>

#include "gwpa/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gwpa::cli::run(args, std::cout, std::cerr);
}
