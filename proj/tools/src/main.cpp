#include <iostream>

#include "crcert/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return crcert::cli::run(args, std::cout, std::cerr);
}
