//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cellfeat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kBadInput = 2,
  kBadOutput = 3,
  kUnknownControl = 4,
};

// Entry point behind the `cellfeat` binary; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cellfeat::cli
