#include <iostream>
#include <string>
#include <vector>

#include "radiusseq/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return radiusseq::cli::run(args, std::cout, std::cerr);
}
