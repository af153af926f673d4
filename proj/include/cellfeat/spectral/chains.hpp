//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <vector>

#include "cellfeat/lifting/cell_complex.hpp"
#include "cellfeat/spectral/symmetric.hpp"

namespace cellfeat::spectral {

/// Sampled formal sums over the k-cells, one per row, entries in {-1, 0, 1}.
struct ChainMatrix {
  int dim = 0;
  int walk_len = 0;
  std::uint64_t seed = 0;
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // row-major

  double operator()(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
};

// Sorted neighbour lists of the k-cells: two cells are adjacent when they
// share a (k-1)-face or sit in a common (k+1)-cell.
std::vector<std::vector<int>> cell_adjacency(const lifting::CellComplex &complex, int k);

/// Each row is a seeded random walk of walk_len cells on cell_adjacency():
/// the start is uniform, every step moves to a uniform neighbour, and the
/// t-th visited cell gets (-1)^t (a revisit overwrites). A cell without
/// neighbours ends the walk. All draws come from SplitMix64(seed).
///
/// Throws DimensionOutOfRange, EmptyDimension when there are no k-cells.
ChainMatrix sample_chain_matrix(const lifting::CellComplex &complex, int k,
                                int n_samples, int walk_len, std::uint64_t seed);

// Top eigenvalues of C^T C / max(1, rows), descending and zero padded.
SpectrumSummary spectral_chains(const ChainMatrix &chains, int top_k);

} // namespace cellfeat::spectral
