#include <iostream>
#include <vector>

#include "homveech/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return homveech::cli::run(args, std::cout, std::cerr);
}
