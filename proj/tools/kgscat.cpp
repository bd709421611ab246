#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "kgscat/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    kgscat::cli::RunOptions options;
    options.color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    return kgscat::cli::run(args, std::cout, std::cerr, options);
}
