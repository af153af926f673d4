//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/spectral/graph_stats.hpp"

namespace cellfeat::spectral {

DegreeCentrality degree_centrality(const lifting::CellComplex &complex, int k) {
  if (k < 0 || k > 2)
    throw DimensionOutOfRange("centrality is defined for dimensions 0..2, got "
                              + std::to_string(k));
  const int n = complex.count(k);
  std::vector<int> incident(n, 0);
  for (const auto &cell: complex.cells(k + 1)) {
    std::vector<int> faces;
    for (const auto &inc: cell.boundary)
      faces.push_back(inc.face);
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (int f: faces)
      ++incident[f];
  }

  DegreeCentrality out;
  out.values.resize(n);
  const double denom = std::max(1, complex.count(k + 1));
  for (int i = 0; i < n; ++i)
    out.values[i] = incident[i] / denom;

  if (n > 0) {
    double sum = 0.0;
    for (double v: out.values)
      sum += v;
    out.summary.mean = sum / n;
    double var = 0.0;
    for (double v: out.values)
      var += (v - out.summary.mean) * (v - out.summary.mean);
    out.summary.std = std::sqrt(var / n);
    out.summary.max = *std::max_element(out.values.begin(), out.values.end());
  }
  return out;
}

} // namespace cellfeat::spectral
