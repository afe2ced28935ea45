#include "gsb/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gsb::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
