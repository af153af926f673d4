//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <numeric>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/statlab/statlab.hpp"

namespace cellfeat::statlab {

HolmResult holm_adjust(std::span<const double> pvals, double alpha) {
  const std::size_t m = pvals.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!(pvals[i] >= 0.0 && pvals[i] <= 1.0))
      throw BadP("p-value " + std::to_string(i) + " outside [0, 1]");

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return pvals[x] < pvals[y]; });

  HolmResult out;
  out.adjusted.resize(m);
  out.reject.resize(m);
  double running = 0.0;
  bool rejecting = true;
  for (std::size_t rank = 0; rank < m; ++rank) {
    const std::size_t i = order[rank];
    running = std::max(running, std::min(1.0, static_cast<double>(m - rank) * pvals[i]));
    out.adjusted[i] = running;
    rejecting = rejecting && running <= alpha;
    out.reject[i] = rejecting;
  }
  return out;
}

} // namespace cellfeat::statlab
