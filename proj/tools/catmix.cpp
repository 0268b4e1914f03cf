#include <iostream>
#include <vector>

#include "catmix/cli_config.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return catmix::cli_main(args, std::cout, std::cerr);
}
