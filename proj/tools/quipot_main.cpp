#include <iostream>
#include <string>
#include <vector>

#include "quipot/report.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return quipot::run_cli(args, std::cout, std::cerr);
}
