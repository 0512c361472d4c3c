// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#include <iostream>

#include "wxkit/cli/cli.hpp"

int main(int argc, char** argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return wxkit::cli::run_cli(args, std::cin, std::cout, std::cerr);
}
