// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "mwagent/commands.hpp"

int main(int argc, char** argv) { return mwagent::run_cli(argc, argv, std::cout, std::cerr); }
