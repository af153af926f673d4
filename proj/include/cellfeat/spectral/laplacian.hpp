//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "cellfeat/lifting/cell_complex.hpp"
#include "cellfeat/spectral/symmetric.hpp"

namespace cellfeat::spectral {

// L_k = d_k^T d_k + d_{k+1} d_{k+1}^T, k in 0..3; missing terms are zero.
SymmetricMatrix hodge_laplacian(const lifting::CellComplex &complex, int k);

} // namespace cellfeat::spectral
