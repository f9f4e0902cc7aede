#include <iostream>

#include "qmat/cli.hpp"

int main(int argc, char** argv)
{
    return qmat::cli::run(argc, argv, std::cout, std::cerr);
}
