// Copyright 2026 the plcaut authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "plcaut/cli.hpp"

int main(int argc, char** argv) {
  return plcaut::run_cli(argc, argv, std::cout, std::cerr);
}
