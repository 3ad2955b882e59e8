#include <iostream>
#include <string>
#include <vector>

#include "symres/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return symres::cli::run(std::move(args), std::cout, std::cerr);
}
