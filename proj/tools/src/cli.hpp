// Copyright 2026 The foliage Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foliage::cli {

inline constexpr int kExitDecided = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUndecided = 2;

/// Runs one command. `args` excludes the program name. JSON documents go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foliage::cli
