#include "dgloc/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return dgloc::run_cli(argc, argv, std::cout, std::cerr);
}
