#include "hspoly/cli.hpp"
#include "hspoly/rational.hpp"

#include <iostream>

int main(int argc, char** argv) {
    hspoly::set_default_digits(hspoly::default_digits());
    std::vector<std::string> args(argv + 1, argv + argc);
    return hspoly::run_cli(args, std::cout, std::cerr);
}
