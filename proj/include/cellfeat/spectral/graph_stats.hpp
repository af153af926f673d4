//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <vector>

#include "cellfeat/lifting/cell_complex.hpp"
#include "cellfeat/molio/molecule.hpp"

namespace cellfeat::spectral {

struct SummaryStats {
  double mean = 0.0;
  double std = 0.0;  // population
  double max = 0.0;
};

struct DegreeCentrality {
  std::vector<double> values;
  SummaryStats summary;
};

// Centrality of a k-cell (k in 0..2): number of (k+1)-cells it bounds over
// max(1, |C_{k+1}|).
DegreeCentrality degree_centrality(const lifting::CellComplex &complex, int k);

struct ApspResult {
  int n = 0;
  // Row-major n x n; unreachable pairs are +infinity.
  std::vector<double> distance;
  // Over unordered pairs with a finite distance.
  double mean = 0.0;
  double diameter = 0.0;
  double wiener = 0.0;

  double operator()(int i, int j) const { return distance[static_cast<std::size_t>(i) * n + j]; }
};

// Unweighted BFS from every atom.
ApspResult apsp(const molio::MolecularGraph &graph);

} // namespace cellfeat::spectral
