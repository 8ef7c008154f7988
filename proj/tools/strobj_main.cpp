// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "strobj/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return strobj::run_cli(std::move(args), std::cout, std::cerr);
}
