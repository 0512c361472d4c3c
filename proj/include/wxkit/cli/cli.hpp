// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wxkit::cli {

enum ExitCode : int {
  ok = 0,
  io_error = 1,
  no_data = 2,
  invalid = 3,
};

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

/// Process environment.
EnvLookup system_env();

/// Runs one invocation.  `args` excludes the program name.  Machine output
/// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const EnvLookup& env = system_env());

} // namespace wxkit::cli
