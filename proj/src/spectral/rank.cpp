//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/lifting/cell_complex.hpp"
#include "cellfeat/spectral/homology.hpp"

namespace cellfeat::spectral {
namespace {

struct Overflow { };

struct CheckedOps {
  using Value = std::int64_t;

  static Value step(Value pivot, Value x, Value factor, Value y, Value prev) {
    Value a, b, diff;
    if (__builtin_mul_overflow(pivot, x, &a) || __builtin_mul_overflow(factor, y, &b)
        || __builtin_sub_overflow(a, b, &diff))
      throw Overflow {};
    return diff / prev;
  }
};

struct BigOps {
  using Value = boost::multiprecision::cpp_int;

  static Value step(const Value &pivot, const Value &x, const Value &factor,
                    const Value &y, const Value &prev) {
    return (pivot * x - factor * y) / prev;
  }
};

// Fraction-free elimination. After pivots on rows r_1..r_t and columns
// c_1..c_t every remaining entry is the minor on those rows/columns plus its
// own, so dividing by the previous pivot is exact.
template <class Ops>
int bareiss_rank(const BoundaryMatrix &matrix) {
  using Value = typename Ops::Value;
  const int rows = matrix.rows(), cols = matrix.cols();
  std::vector<std::vector<Value>> m(rows, std::vector<Value>(cols, Value(0)));
  for (const auto &e: matrix.entries())
    m[e.row][e.col] += Value(e.value);

  Value prev(1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0)
      continue;
    std::swap(m[pivot], m[rank]);

    const Value &p = m[rank][c];
    for (int r = rank + 1; r < rows; ++r) {
      const Value factor = m[r][c];
      for (int j = c + 1; j < cols; ++j)
        m[r][j] = Ops::step(p, m[r][j], factor, m[rank][j], prev);
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

} // namespace

int rational_rank(const BoundaryMatrix &matrix) {
  if (matrix.entries().empty())
    return 0;
  try {
    return bareiss_rank<CheckedOps>(matrix);
  } catch (const Overflow &) {
    return bareiss_rank<BigOps>(matrix);
  }
}

BettiNumbers betti_numbers(const lifting::CellComplex &complex) {
  const auto report = lifting::validate(complex);
  if (!report.ok())
    throw InvalidComplex("invalid complex: " + report.violation->message);

  std::array<int, lifting::kMaxDim + 2> rank {};
  for (int k = 1; k <= lifting::kMaxDim; ++k)
    rank[k] = rational_rank(lifting::boundary_matrix(complex, k));

  BettiNumbers betti {};
  for (int k = 0; k <= lifting::kMaxDim; ++k)
    betti[k] = complex.count(k) - rank[k] - rank[k + 1];
  return betti;
}

} // namespace cellfeat::spectral
