#include <iostream>
#include <string>
#include <vector>

#include "wspec/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return wspec::cli::run(std::move(args), std::cout, std::cerr);
}
