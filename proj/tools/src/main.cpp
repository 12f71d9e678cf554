#include "pdloop/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return pdloop::cli::main_entry(argc, argv, std::cout, std::cerr);
}
