#include "gvkit/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return gvkit::cli::run_cli(argc, argv, std::cout, std::cerr);
}
