#include <iostream>
#include <string>
#include <vector>

#include "weierstab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return weierstab::cli::dispatch(args, std::cout, std::cerr);
}
