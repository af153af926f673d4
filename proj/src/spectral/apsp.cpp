//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <deque>
#include <limits>

#include "cellfeat/spectral/graph_stats.hpp"

namespace cellfeat::spectral {

ApspResult apsp(const molio::MolecularGraph &graph) {
  const int n = graph.num_atoms();
  const std::size_t sn = n;
  ApspResult out;
  out.n = n;
  out.distance.assign(sn * sn, std::numeric_limits<double>::infinity());

  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<int> queue {s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const auto &nb: graph.neighbors(v)) {
        if (dist[nb.atom] < 0) {
          dist[nb.atom] = dist[v] + 1;
          queue.push_back(nb.atom);
        }
      }
    }
    for (int t = 0; t < n; ++t)
      if (dist[t] >= 0)
        out.distance[s * sn + t] = dist[t];
  }

  long pairs = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = out(i, j);
      if (d == std::numeric_limits<double>::infinity())
        continue;
      out.wiener += d;
      out.diameter = std::max(out.diameter, d);
      ++pairs;
    }
  }
  if (pairs > 0)
    out.mean = out.wiener / pairs;
  return out;
}

} // namespace cellfeat::spectral
