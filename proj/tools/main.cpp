#include "wedgent/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return wedgent::cli_main(argc, argv, std::cout, std::cerr);
}
