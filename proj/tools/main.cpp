#include <iostream>

#include "spfc/cli.hpp"

int main(int argc, char** argv) {
    return spfc::cli::run_cli(argc, argv, std::cout, std::cerr);
}
