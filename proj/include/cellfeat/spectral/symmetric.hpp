//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <span>
#include <vector>

namespace cellfeat::spectral {

/// Dense symmetric matrix, packed lower triangle.
class SymmetricMatrix {
public:
  explicit SymmetricMatrix(int order = 0)
      : order_(order), data_(static_cast<std::size_t>(order) * (order + 1) / 2, 0.0) { }

  // Reads the lower triangle of a row-major order x order array.
  static SymmetricMatrix from_dense(std::span<const double> values, int order);

  int order() const noexcept { return order_; }

  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double v) { data_[index(i, j)] = v; }
  void add(int i, int j, double v) { data_[index(i, j)] += v; }

  double frobenius_norm() const;
  std::vector<double> dense() const;

private:
  static std::size_t index(int i, int j) {
    if (i < j)
      std::swap(i, j);
    return static_cast<std::size_t>(i) * (i + 1) / 2 + j;
  }

  int order_;
  std::vector<double> data_;
};

struct EigenDecomposition {
  // Ascending.
  std::vector<double> values;
  // Column-major: eigenvector k occupies [k*n, (k+1)*n).
  std::vector<double> vectors;
  int sweeps = 0;

  std::span<const double> vector(int k) const {
    const std::size_t n = values.size();
    return {vectors.data() + k * n, n};
  }
};

inline constexpr double kDefaultEigenTolerance = 1e-12;

/// Cyclic Jacobi. Sweeps until every off-diagonal magnitude is below
/// tol * ||M||_F; throws NonConvergence after max_sweeps.
EigenDecomposition sym_eigs(const SymmetricMatrix &matrix,
                            double tol = kDefaultEigenTolerance,
                            int max_sweeps = 100);

struct SpectrumSummary {
  // Descending, zero padded.
  std::vector<double> eigenvalues;
};

SpectrumSummary top_k_eigs(const SymmetricMatrix &matrix, int top_k);

} // namespace cellfeat::spectral
