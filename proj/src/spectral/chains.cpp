//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/spectral/chains.hpp"

#include <algorithm>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/core/rng.hpp"

namespace cellfeat::spectral {

std::vector<std::vector<int>> cell_adjacency(const lifting::CellComplex &complex,
                                             int k) {
  if (k < 0 || k > lifting::kMaxDim)
    throw DimensionOutOfRange("cell dimension " + std::to_string(k));
  const int n = complex.count(k);
  std::vector<std::vector<int>> adj(n);

  auto link_all = [&](const std::vector<int> &group) {
    for (int x: group)
      for (int y: group)
        if (x != y)
          adj[x].push_back(y);
  };

  if (k >= 1) {
    std::vector<std::vector<int>> cofaces(complex.count(k - 1));
    for (const auto &cell: complex.cells(k))
      for (const auto &inc: cell.boundary)
        cofaces[inc.face].push_back(cell.id);
    for (const auto &group: cofaces)
      link_all(group);
  }
  if (k + 1 <= lifting::kMaxDim) {
    for (const auto &cell: complex.cells(k + 1)) {
      std::vector<int> group;
      for (const auto &inc: cell.boundary)
        group.push_back(inc.face);
      link_all(group);
    }
  }

  for (auto &list: adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

ChainMatrix sample_chain_matrix(const lifting::CellComplex &complex, int k,
                                int n_samples, int walk_len, std::uint64_t seed) {
  if (k < 0 || k > lifting::kMaxDim)
    throw DimensionOutOfRange("cell dimension " + std::to_string(k));
  if (n_samples < 0 || walk_len < 1)
    throw Error("n_samples must be >= 0 and walk_len >= 1");
  const int n = complex.count(k);
  if (n == 0)
    throw EmptyDimension("no cells of dimension " + std::to_string(k));

  ChainMatrix out;
  out.dim = k;
  out.walk_len = walk_len;
  out.seed = seed;
  out.rows = n_samples;
  out.cols = n;
  out.values.assign(static_cast<std::size_t>(n_samples) * n, 0.0);

  const auto adj = cell_adjacency(complex, k);
  SplitMix64 rng(seed);
  for (int row = 0; row < n_samples; ++row) {
    double *dst = out.values.data() + static_cast<std::size_t>(row) * n;
    int cell = static_cast<int>(rng.below(n));
    dst[cell] = 1.0;
    for (int t = 1; t < walk_len; ++t) {
      const auto &nbrs = adj[cell];
      if (nbrs.empty())
        break;
      cell = nbrs[rng.below(nbrs.size())];
      dst[cell] = t % 2 == 0 ? 1.0 : -1.0;
    }
  }
  return out;
}

SpectrumSummary spectral_chains(const ChainMatrix &chains, int top_k) {
  const int n = chains.cols;
  const double scale = 1.0 / std::max(1, chains.rows);
  SymmetricMatrix gram(n);
  for (int r = 0; r < chains.rows; ++r) {
    const double *row = chains.values.data() + static_cast<std::size_t>(r) * n;
    std::vector<int> support;
    for (int c = 0; c < n; ++c)
      if (row[c] != 0.0)
        support.push_back(c);
    for (std::size_t x = 0; x < support.size(); ++x)
      for (std::size_t y = 0; y <= x; ++y)
        gram.add(support[x], support[y], row[support[x]] * row[support[y]]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      gram.set(i, j, gram(i, j) * scale);
  return top_k_eigs(gram, top_k);
}

} // namespace cellfeat::spectral
