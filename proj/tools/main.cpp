#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    const thinkit::cli::CliResult r =
        thinkit::cli::cli_dispatch(std::vector<std::string>(argv, argv + argc));
    std::cerr << r.err;
    std::cout << r.out;
    return r.exit_code;
}
