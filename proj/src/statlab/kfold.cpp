//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <numeric>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/core/rng.hpp"
#include "cellfeat/statlab/statlab.hpp"

namespace cellfeat::statlab {

std::vector<std::vector<int>> kfold_split(int n, int k, std::uint64_t seed) {
  if (k < 2 || k > n)
    throw BadK("need 2 <= K <= n, got K=" + std::to_string(k) + " n=" + std::to_string(n));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  for (int i = n - 1; i >= 1; --i)
    std::swap(order[i], order[rng.below(static_cast<std::size_t>(i) + 1)]);

  std::vector<std::vector<int>> folds(k);
  const int base = n / k, extra = n % k;
  int at = 0;
  for (int f = 0; f < k; ++f) {
    const int size = base + (f < extra ? 1 : 0);
    folds[f].assign(order.begin() + at, order.begin() + at + size);
    at += size;
  }
  return folds;
}

} // namespace cellfeat::statlab
