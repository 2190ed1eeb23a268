#include <iostream>
#include <vector>

#include "lynsys/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lynsys::cli::run(args, std::cout, std::cerr);
}
