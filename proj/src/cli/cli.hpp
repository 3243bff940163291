// Copyright 2026 The compdesign Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>

namespace compdesign::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // rejected or infeasible parameters, I/O failures
inline constexpr int kExitUsage = 2;    // malformed command line

// Parses `argv` (argv[0] is the program name), runs one subcommand and writes
// its output to `out` or to the --out file. Diagnostics go to `err` as a
// single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace compdesign::cli
