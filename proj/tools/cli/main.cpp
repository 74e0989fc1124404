#include <iostream>
#include <vector>

#include "reports.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cech23::cli::run_cli(args, std::cout, std::cerr);
}
