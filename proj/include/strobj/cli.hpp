// Copyright (c) strobj contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace strobj {

/// The command-line surface; `main` is a thin wrapper. Returns the process
/// exit code: 0 on success, 1 on diagnostics, 2 on internal errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace strobj
