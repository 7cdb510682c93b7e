#include <iostream>
#include <string>
#include <vector>

#include "treeq/cli_app.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return treeq::cli::run(args, std::cout, std::cerr);
}
