//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/spectral/symmetric.hpp"

namespace cellfeat::spectral {

SymmetricMatrix SymmetricMatrix::from_dense(std::span<const double> values,
                                            int order) {
  if (values.size() != static_cast<std::size_t>(order) * order)
    throw ShapeMismatch("dense matrix size does not match its order");
  SymmetricMatrix m(order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j <= i; ++j)
      m.set(i, j, values[static_cast<std::size_t>(i) * order + j]);
  return m;
}

double SymmetricMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < i; ++j)
      sum += 2.0 * (*this)(i, j) * (*this)(i, j);
    sum += (*this)(i, i) * (*this)(i, i);
  }
  return std::sqrt(sum);
}

std::vector<double> SymmetricMatrix::dense() const {
  const std::size_t n = order_;
  std::vector<double> out(n * n);
  for (int i = 0; i < order_; ++i)
    for (int j = 0; j < order_; ++j)
      out[i * n + j] = (*this)(i, j);
  return out;
}

EigenDecomposition sym_eigs(const SymmetricMatrix &matrix, double tol,
                            int max_sweeps) {
  const int n = matrix.order();
  const std::size_t sn = n;
  std::vector<double> a = matrix.dense();
  std::vector<double> v(sn * sn, 0.0);
  for (int i = 0; i < n; ++i)
    v[i * sn + i] = 1.0;

  auto at = [&](int i, int j) -> double & { return a[i * sn + j]; };
  const double threshold = tol * matrix.frobenius_norm();

  auto converged = [&] {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(at(i, j)) >= threshold)
          return false;
    return true;
  };

  int sweep = 0;
  while (threshold > 0.0 && !converged()) {
    if (sweep == max_sweeps)
      throw NonConvergence("Jacobi did not converge in "
                           + std::to_string(max_sweeps) + " sweeps");
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0)
          continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150)
          t = 0.5 / theta;
        else
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q)
            continue;
          const double g = at(r, p), h = at(r, q);
          at(r, p) = at(p, r) = g - s * (h + g * tau);
          at(r, q) = at(q, r) = h + s * (g - h * tau);
        }
        for (int r = 0; r < n; ++r) {
          const double g = v[r * sn + p], h = v[r * sn + q];
          v[r * sn + p] = g - s * (h + g * tau);
          v[r * sn + q] = h + s * (g - h * tau);
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int x, int y) { return at(x, x) < at(y, y); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors.resize(sn * sn);
  for (int k = 0; k < n; ++k) {
    out.values[k] = at(idx[k], idx[k]);
    for (int r = 0; r < n; ++r)
      out.vectors[k * sn + r] = v[r * sn + idx[k]];
  }
  return out;
}

SpectrumSummary top_k_eigs(const SymmetricMatrix &matrix, int top_k) {
  if (top_k < 1)
    throw Error("top_k must be at least 1");
  SpectrumSummary out;
  out.eigenvalues.assign(top_k, 0.0);
  if (matrix.order() == 0)
    return out;
  const auto eig = sym_eigs(matrix);
  const int n = matrix.order();
  for (int i = 0; i < std::min(n, top_k); ++i)
    out.eigenvalues[i] = eig.values[n - 1 - i];
  return out;
}

} // namespace cellfeat::spectral
