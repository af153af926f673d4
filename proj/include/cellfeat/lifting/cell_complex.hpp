//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cellfeat/molio/element_table.hpp"

namespace cellfeat::lifting {

inline constexpr int kMaxDim = 3;

enum class CellKind {
  kParticlePoint,  // 0-cell: proton, neutron or electron site of an atom
  kAtomShellEdge,  // 1-cell: edge of an atom's p -> n -> e triangle
  kBondLinkEdge,   // 1-cell: one of the two parallel edges of a bond
  kAtomDisk,       // 2-cell: fills an atom triangle
  kBondFace,       // 2-cell: one of the two faces glued on a bond digon
  kRingVolume,     // 3-cell: induced cycle
  kKhopVolume,     // 3-cell: k-hop interaction
};

int cell_dimension(CellKind kind);
std::string_view to_string(CellKind kind);

struct Incidence {
  int face = 0;
  int coefficient = 0;

  bool operator==(const Incidence &) const = default;
};

struct Cell {
  int id = 0;
  int dim = 0;
  CellKind kind = CellKind::kParticlePoint;
  // Provenance. `particle` is 0/1/2 for p/n/e points and shell edges.
  std::vector<int> atoms;
  std::vector<int> bonds;
  int ring = -1;
  int particle = -1;
  std::vector<Incidence> boundary;
};

/// Cells of dimension 0..3 with signed boundaries into the dimension below.
/// Construction does not check anything; run validate() on hand-built
/// complexes.
class CellComplex {
public:
  // Assigns cell.id (position within its dimension) and returns it.
  int add_cell(Cell cell);

  int count(int dim) const {
    return dim < 0 || dim > kMaxDim ? 0 : static_cast<int>(cells_[dim].size());
  }
  std::array<int, kMaxDim + 1> counts() const;

  const std::vector<Cell> &cells(int dim) const { return cells_.at(dim); }
  const Cell &cell(int dim, int id) const { return cells_.at(dim).at(id); }

  // Per-atom composition backing the particle points.
  std::vector<molio::AtomComposition> composition;

private:
  std::array<std::vector<Cell>, kMaxDim + 1> cells_;
};

struct MatrixEntry {
  int row = 0;
  int col = 0;
  int value = 0;

  bool operator==(const MatrixEntry &) const = default;
};

/// Sparse signed incidence matrix of one boundary map: rows are (k-1)-cells,
/// columns are k-cells. Entries are sorted by (col, row).
class BoundaryMatrix {
public:
  BoundaryMatrix(int rows, int cols, std::vector<MatrixEntry> entries);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const std::vector<MatrixEntry> &entries() const noexcept { return entries_; }
  std::span<const MatrixEntry> column(int c) const {
    return {entries_.data() + col_start_[c],
            entries_.data() + col_start_[c + 1]};
  }

  // Row-major dense copy.
  std::vector<std::vector<int>> dense() const;

private:
  int rows_;
  int cols_;
  std::vector<MatrixEntry> entries_;
  std::vector<std::size_t> col_start_;
};

// k in 1..3; throws DimensionOutOfRange otherwise.
BoundaryMatrix boundary_matrix(const CellComplex &complex, int k);

struct Violation {
  int dim = 0;
  int cell = 0;
  std::string message;
};

struct ValidationReport {
  std::optional<Violation> violation;

  bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks kind/dimension consistency, that faces live exactly one dimension
/// down, that coefficients are +-1 without repeated faces, and that
/// boundary(boundary(c)) = 0 over the integers. Reports the first offender.
ValidationReport validate(const CellComplex &complex);

// Structured-text dump for inspection (not a stable format).
std::string to_debug_json(const CellComplex &complex);

} // namespace cellfeat::lifting
