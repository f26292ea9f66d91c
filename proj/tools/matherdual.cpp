#include <iostream>
#include <string>
#include <vector>

#include "mather/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mather::cli::run(args, std::cout, std::cerr);
}
