#include <iostream>
#include <vector>

#include "cohlab/cli/app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return cohlab::cli::run_cli(args, std::cout, std::cerr);
}
