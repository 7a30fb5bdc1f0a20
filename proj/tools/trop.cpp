#include <iostream>
#include <vector>

#include "trop/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return trop::run_command(args, std::cout, std::cerr);
}
