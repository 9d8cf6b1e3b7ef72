/* Apache License, Version 2.0 */
#include <iostream>
#include <string>
#include <vector>

#include "polylink/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polylink::run(args, std::cout, std::cerr);
}
