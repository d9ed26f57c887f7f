#include <iostream>

#include "gtj/cli.hpp"

int main(int argc, char** argv) {
    return gtj::run_cli(argc, argv, std::cout, std::cerr);
}
