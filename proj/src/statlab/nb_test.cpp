//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>
#include <limits>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/statlab/statlab.hpp"

namespace cellfeat::statlab {

NBComparison nb_test(std::span<const double> d, double alpha) {
  const int k = static_cast<int>(d.size());
  if (k < 2)
    throw BadLength("NB test needs at least 2 fold differences, got " + std::to_string(k));
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error("alpha must lie in (0, 1)");

  NBComparison out;
  out.dof = k - 1;

  double sum = 0.0, scale = 0.0;
  for (double x: d) {
    sum += x;
    scale = std::max(scale, std::abs(x));
  }
  out.delta = sum / k;
  double sq = 0.0;
  for (double x: d)
    sq += (x - out.delta) * (x - out.delta);
  out.variance = sq / (k - 1);
  out.se_nb = std::sqrt((1.0 / k + 1.0 / (k - 1)) * out.variance);

  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  if (std::sqrt(out.variance) <= noise) {
    out.degenerate = true;
    out.se_nb = 0.0;
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (out.delta > 0.0) {
      out.t_nb = inf;
      out.p = 0.0;
    } else if (out.delta < 0.0) {
      out.t_nb = -inf;
      out.p = 1.0;
    } else {
      out.t_nb = 0.0;
      out.p = 0.5;
    }
    out.ci_low = out.ci_high = out.delta;
    return out;
  }

  out.t_nb = out.delta / out.se_nb;
  out.p = t_survival(out.t_nb, out.dof);
  const double half = t_quantile(1.0 - alpha / 2.0, out.dof) * out.se_nb;
  out.ci_low = out.delta - half;
  out.ci_high = out.delta + half;
  return out;
}

} // namespace cellfeat::statlab
