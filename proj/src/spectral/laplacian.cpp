//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/spectral/laplacian.hpp"

#include <vector>

#include "cellfeat/core/errors.hpp"

namespace cellfeat::spectral {

SymmetricMatrix hodge_laplacian(const lifting::CellComplex &complex, int k) {
  if (k < 0 || k > lifting::kMaxDim)
    throw DimensionOutOfRange("Laplacian index " + std::to_string(k)
                              + " outside 0..3");
  const int n = complex.count(k);
  std::vector<long> acc(static_cast<std::size_t>(n) * (n + 1) / 2, 0);
  auto add = [&](int i, int j, long v) {
    if (i < j)
      std::swap(i, j);
    acc[static_cast<std::size_t>(i) * (i + 1) / 2 + j] += v;
  };

  // Down part d_k^T d_k: pairs of k-cells sharing a (k-1)-face.
  if (k >= 1) {
    std::vector<std::vector<lifting::Incidence>> rows(complex.count(k - 1));
    for (const auto &cell: complex.cells(k))
      for (const auto &inc: cell.boundary)
        rows[inc.face].push_back({cell.id, inc.coefficient});
    for (const auto &row: rows)
      for (std::size_t x = 0; x < row.size(); ++x)
        for (std::size_t y = 0; y <= x; ++y)
          add(row[x].face, row[y].face,
              static_cast<long>(row[x].coefficient) * row[y].coefficient);
  }

  // Up part d_{k+1} d_{k+1}^T: pairs of k-cells in a common (k+1)-cell.
  if (k + 1 <= lifting::kMaxDim) {
    for (const auto &cell: complex.cells(k + 1)) {
      const auto &b = cell.boundary;
      for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = 0; y <= x; ++y)
          add(b[x].face, b[y].face,
              static_cast<long>(b[x].coefficient) * b[y].coefficient);
    }
  }

  SymmetricMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      out.set(i, j, static_cast<double>(acc[static_cast<std::size_t>(i) * (i + 1) / 2 + j]));
  return out;
}

} // namespace cellfeat::spectral
