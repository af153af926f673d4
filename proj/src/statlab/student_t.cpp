//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <limits>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/statlab/statlab.hpp"

namespace cellfeat::statlab {
namespace {

// Continued fraction for I_x(a, b), modified Lentz.
double beta_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 10000;

  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny)
    d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny)
      d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny)
      c = kTiny;
    d = 1.0 / d;
    h *= d * c;

    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny)
      d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny)
      c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps)
      return h;
  }
  throw NonConvergence("incomplete beta continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw Error("incomplete beta needs a, b > 0");
  if (std::isnan(x))
    return x;
  if (x <= 0.0)
    return 0.0;
  if (x >= 1.0)
    return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b)
                           + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double t_survival(double t, int nu) {
  if (nu < 1)
    throw Error("degrees of freedom must be >= 1");
  if (std::isnan(t))
    return t;
  if (std::isinf(t))
    return t > 0 ? 0.0 : 1.0;
  const double v = nu;
  // P(|T| >= |t|) = I_{v/(v+t^2)}(v/2, 1/2).
  const double two_sided = regularized_incomplete_beta(v / 2.0, 0.5, v / (v + t * t));
  return t >= 0.0 ? 0.5 * two_sided : 1.0 - 0.5 * two_sided;
}

double t_quantile(double prob, int nu) {
  if (!(prob > 0.0 && prob < 1.0))
    throw Error("quantile probability must lie in (0, 1)");
  if (prob == 0.5)
    return 0.0;
  if (prob < 0.5)
    return -t_quantile(1.0 - prob, nu);

  const double tail = 1.0 - prob;
  double lo = 0.0, hi = 1.0;
  while (t_survival(hi, nu) > tail)
    hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (t_survival(mid, nu) > tail)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace cellfeat::statlab
