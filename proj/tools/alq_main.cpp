#include <iostream>
#include <string>
#include <vector>

#include "alq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return alq::run_cli(args, std::cout, std::cerr);
}
