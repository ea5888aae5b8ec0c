#include <iostream>

#include "sl2rat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto r = sl2rat::cli::execute(args, std::cin);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
