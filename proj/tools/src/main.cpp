#include <iostream>

#include "lab_cli/cli.hpp"

int main(int argc, char** argv)
{
    return lab_cli::run(argc, argv, std::cout, std::cerr);
}
