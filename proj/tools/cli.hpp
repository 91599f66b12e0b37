// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the colortiger Project.

#pragma once

#include <iosfwd>

namespace colortiger::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumerical = 4;

/// Environment variable holding the default worker count.
inline constexpr const char* kThreadsEnv = "COLORTIGER_THREADS";

/// Runs one subcommand. Human-readable output goes to `out`, diagnostics to
/// `err`; machine-readable results go to the files named by the flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace colortiger::cli
