#include "gal/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gal::cli::run(argc, argv, std::cout, std::cerr);
}
