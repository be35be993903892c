#include <iostream>
#include <string>
#include <vector>

#include "polyexp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polyexp::cli::run(args, std::cout, std::cerr);
}
