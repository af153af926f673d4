//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>

#include "cellfeat/lifting/cell_complex.hpp"

namespace cellfeat::spectral {

using lifting::BoundaryMatrix;

/// Rank over the rationals by fraction-free (Bareiss) elimination. Runs in
/// 64-bit integers and restarts with arbitrary precision on overflow, so the
/// result is exact.
int rational_rank(const BoundaryMatrix &matrix);

using BettiNumbers = std::array<int, lifting::kMaxDim + 1>;

// beta_k = |C_k| - rank d_k - rank d_{k+1}. Throws InvalidComplex when the
// complex fails validate().
BettiNumbers betti_numbers(const lifting::CellComplex &complex);

} // namespace cellfeat::spectral
