#include <cstdlib>
#include <iostream>

#include "radicalc/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_bits;
    if (const char* bits = std::getenv("RADICALC_BITS"))
        env_bits = bits;
    return radicalc::cli::run(args, std::cin, std::cout, std::cerr, env_bits);
}
