//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cellfeat/ecc/features.hpp"

namespace cellfeat::ecc {

struct BatchResult {
  // One slot per input, in input order; empty when featurization threw.
  std::vector<std::optional<ECCVector>> vectors;
  std::vector<std::string> errors;
};

// OpenMP fan-out over molecules. jobs <= 0 uses the OpenMP default.
BatchResult featurize_batch(std::span<const molio::MolecularGraph> graphs,
                            const ECCConfig &config, int jobs = 0);

// Serial reference with identical output.
BatchResult featurize_batch_serial(std::span<const molio::MolecularGraph> graphs,
                                   const ECCConfig &config);

} // namespace cellfeat::ecc
