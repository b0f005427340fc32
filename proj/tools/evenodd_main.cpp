#include "evenodd/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return evenodd::cli::run(args, std::cout, std::cerr, std::getenv(evenodd::cli::kToleranceEnv));
}
