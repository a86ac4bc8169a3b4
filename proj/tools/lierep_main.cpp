#include <iostream>

#include "lierep/cli.hpp"

int main(int argc, char** argv)
{
    auto r = lierep::cli::run({argv + 1, argv + argc});
    std::cout << r.out;
    std::cerr << r.err;
    return r.status;
}
