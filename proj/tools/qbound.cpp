#include <iostream>

#include "qbound/cli.hpp"

int main(int argc, char** argv) {
    return qbound::cli::run(argc, argv, std::cout, std::cerr);
}
