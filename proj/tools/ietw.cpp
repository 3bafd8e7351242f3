// ietw.cpp -- command-line entry point

#include "ietw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ietw::run_command(args, std::cout, std::cerr);
}
