#include <iostream>
#include <string>
#include <vector>

#include "qfourier_cli/commands.hpp"

int main(int argc, char** argv) {
    return qfourier::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
