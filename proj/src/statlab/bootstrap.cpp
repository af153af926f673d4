//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/core/rng.hpp"
#include "cellfeat/statlab/statlab.hpp"

namespace cellfeat::statlab {
namespace {

void check(std::span<const double> y_true, std::span<const double> y_pred,
           int replicates, double level) {
  if (y_true.size() != y_pred.size())
    throw LengthMismatch("y_true and y_pred differ in length");
  if (y_true.size() < 2)
    throw Error("bootstrap needs at least 2 observations");
  if (replicates < 100)
    throw Error("bootstrap needs at least 100 replicates");
  if (!(level > 0.0 && level < 1.0))
    throw Error("confidence level must lie in (0, 1)");
}

double metric_of_residuals(std::span<const double> y_true, std::span<const double> y_pred,
                           const std::size_t *index, Metric metric) {
  const std::size_t n = y_true.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = index ? index[i] : i;
    const double e = y_pred[j] - y_true[j];
    acc += metric == Metric::kMae ? std::abs(e) : e * e;
  }
  acc /= static_cast<double>(n);
  return metric == Metric::kMae ? acc : std::sqrt(acc);
}

double replicate(std::span<const double> y_true, std::span<const double> y_pred,
                 Metric metric, std::uint64_t seed, int r, std::vector<std::size_t> &idx) {
  SplitMix64 rng(substream_seed(seed, static_cast<std::uint64_t>(r)));
  for (auto &i: idx)
    i = rng.below(y_true.size());
  return metric_of_residuals(y_true, y_pred, idx.data(), metric);
}

double percentile(const std::vector<double> &sorted, double q) {
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

BootstrapCI summarize(std::span<const double> y_true, std::span<const double> y_pred,
                      Metric metric, std::vector<double> stats, std::uint64_t seed,
                      double level) {
  std::sort(stats.begin(), stats.end());
  BootstrapCI out;
  out.point = metric_of_residuals(y_true, y_pred, nullptr, metric);
  out.low = percentile(stats, (1.0 - level) / 2.0);
  out.high = percentile(stats, (1.0 + level) / 2.0);
  out.half_width = std::max(0.0, (out.high - out.low) / 2.0);
  out.replicates = static_cast<int>(stats.size());
  out.seed = seed;
  return out;
}

} // namespace

Metrics metrics(std::span<const double> y_true, std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size() || y_true.empty())
    throw LengthMismatch("metrics need equal, non-empty inputs");
  return {metric_of_residuals(y_true, y_pred, nullptr, Metric::kMae),
          metric_of_residuals(y_true, y_pred, nullptr, Metric::kRmse)};
}

BootstrapCI bootstrap_ci(std::span<const double> y_true, std::span<const double> y_pred,
                         Metric metric, int replicates, std::uint64_t seed, double level) {
  check(y_true, y_pred, replicates, level);
  std::vector<double> stats(replicates);
#pragma omp parallel
  {
    std::vector<std::size_t> idx(y_true.size());
#pragma omp for schedule(static)
    for (int r = 0; r < replicates; ++r)
      stats[r] = replicate(y_true, y_pred, metric, seed, r, idx);
  }
  return summarize(y_true, y_pred, metric, std::move(stats), seed, level);
}

BootstrapCI bootstrap_ci_serial(std::span<const double> y_true,
                                std::span<const double> y_pred, Metric metric,
                                int replicates, std::uint64_t seed, double level) {
  check(y_true, y_pred, replicates, level);
  std::vector<double> stats(replicates);
  std::vector<std::size_t> idx(y_true.size());
  for (int r = 0; r < replicates; ++r)
    stats[r] = replicate(y_true, y_pred, metric, seed, r, idx);
  return summarize(y_true, y_pred, metric, std::move(stats), seed, level);
}

} // namespace cellfeat::statlab
