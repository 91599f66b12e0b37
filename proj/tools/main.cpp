// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return colortiger::cli::run(argc, argv, std::cout, std::cerr);
}
