#include <iostream>
#include <string>
#include <vector>

#include "qgauge_cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qgauge::cli::run(std::move(args), std::cout, std::cerr);
}
