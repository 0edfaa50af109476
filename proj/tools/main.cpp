#include <iostream>
#include <string>
#include <vector>

#include "boxicity/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return boxicity::cli::run(args, std::cout, std::cerr);
}
