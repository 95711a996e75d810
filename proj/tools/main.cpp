#include <iostream>
#include <string>
#include <vector>

#include "grd/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grd::run_cli(args, std::cout, std::cerr);
}
