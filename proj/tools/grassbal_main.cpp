#include <iostream>
#include <string>
#include <vector>

#include "grassbal/command.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grassbal::run_command(args, std::cout, std::cerr);
}
