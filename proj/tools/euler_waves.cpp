#include <iostream>

#include "eulerwaves/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eulerwaves::run_cli(args, std::cout, std::cerr);
}
