#include <iostream>
#include <string>
#include <vector>

#include "partred/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return partred::run_cli(args, std::cout, std::cerr);
}
