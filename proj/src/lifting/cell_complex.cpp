//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/lifting/cell_complex.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "cellfeat/core/errors.hpp"

namespace cellfeat::lifting {

int cell_dimension(CellKind kind) {
  switch (kind) {
  case CellKind::kParticlePoint:
    return 0;
  case CellKind::kAtomShellEdge:
  case CellKind::kBondLinkEdge:
    return 1;
  case CellKind::kAtomDisk:
  case CellKind::kBondFace:
    return 2;
  case CellKind::kRingVolume:
  case CellKind::kKhopVolume:
    return 3;
  }
  return -1;
}

std::string_view to_string(CellKind kind) {
  switch (kind) {
  case CellKind::kParticlePoint:
    return "particle-point";
  case CellKind::kAtomShellEdge:
    return "atom-shell-edge";
  case CellKind::kBondLinkEdge:
    return "bond-link-edge";
  case CellKind::kAtomDisk:
    return "atom-disk";
  case CellKind::kBondFace:
    return "bond-face";
  case CellKind::kRingVolume:
    return "ring-volume";
  case CellKind::kKhopVolume:
    return "khop-volume";
  }
  return "?";
}

int CellComplex::add_cell(Cell cell) {
  if (cell.dim < 0 || cell.dim > kMaxDim)
    throw DimensionOutOfRange("cell dimension " + std::to_string(cell.dim));
  auto &list = cells_[cell.dim];
  cell.id = static_cast<int>(list.size());
  list.push_back(std::move(cell));
  return list.back().id;
}

std::array<int, kMaxDim + 1> CellComplex::counts() const {
  return {count(0), count(1), count(2), count(3)};
}

BoundaryMatrix::BoundaryMatrix(int rows, int cols,
                               std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const MatrixEntry &x, const MatrixEntry &y) {
              return std::pair(x.col, x.row) < std::pair(y.col, y.row);
            });
  col_start_.assign(cols_ + 1, 0);
  for (const MatrixEntry &e: entries_) {
    if (e.row < 0 || e.row >= rows_ || e.col < 0 || e.col >= cols_)
      throw DimensionOutOfRange("matrix entry out of range");
    ++col_start_[e.col + 1];
  }
  for (int c = 0; c < cols_; ++c)
    col_start_[c + 1] += col_start_[c];
}

std::vector<std::vector<int>> BoundaryMatrix::dense() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (const MatrixEntry &e: entries_)
    out[e.row][e.col] += e.value;
  return out;
}

BoundaryMatrix boundary_matrix(const CellComplex &complex, int k) {
  if (k < 1 || k > kMaxDim)
    throw DimensionOutOfRange("boundary map index " + std::to_string(k)
                              + " outside 1..3");
  std::vector<MatrixEntry> entries;
  for (const Cell &cell: complex.cells(k))
    for (const Incidence &inc: cell.boundary)
      entries.push_back({inc.face, cell.id, inc.coefficient});
  return BoundaryMatrix(complex.count(k - 1), complex.count(k),
                        std::move(entries));
}

ValidationReport validate(const CellComplex &complex) {
  auto fail = [](int dim, int id, std::string msg) {
    return ValidationReport {Violation {dim, id, std::move(msg)}};
  };

  for (int dim = 0; dim <= kMaxDim; ++dim) {
    for (const Cell &cell: complex.cells(dim)) {
      if (cell_dimension(cell.kind) != dim)
        return fail(dim, cell.id,
                    std::string("kind ") + std::string(to_string(cell.kind))
                        + " does not belong in dimension " + std::to_string(dim));
      if (dim == 0 && !cell.boundary.empty())
        return fail(dim, cell.id, "0-cell with a non-empty boundary");

      std::vector<int> faces;
      for (const Incidence &inc: cell.boundary) {
        if (inc.face < 0 || inc.face >= complex.count(dim - 1))
          return fail(dim, cell.id,
                      "face " + std::to_string(inc.face)
                          + " is not a cell of dimension " + std::to_string(dim - 1));
        if (inc.coefficient != 1 && inc.coefficient != -1)
          return fail(dim, cell.id,
                      "coefficient " + std::to_string(inc.coefficient)
                          + " outside {-1, +1}");
        faces.push_back(inc.face);
      }
      std::sort(faces.begin(), faces.end());
      if (std::adjacent_find(faces.begin(), faces.end()) != faces.end())
        return fail(dim, cell.id, "face listed twice in the boundary");
    }
  }

  for (int dim = 2; dim <= kMaxDim; ++dim) {
    for (const Cell &cell: complex.cells(dim)) {
      std::map<int, long> acc;
      for (const Incidence &inc: cell.boundary)
        for (const Incidence &sub: complex.cell(dim - 1, inc.face).boundary)
          acc[sub.face] += static_cast<long>(inc.coefficient) * sub.coefficient;
      for (const auto &[face, value]: acc) {
        if (value != 0)
          return fail(dim, cell.id,
                      "boundary of boundary is non-zero (d" + std::to_string(dim - 1)
                          + " d" + std::to_string(dim) + " has "
                          + std::to_string(value) + " on " + std::to_string(dim - 2)
                          + "-cell " + std::to_string(face) + ")");
      }
    }
  }
  return {};
}

std::string to_debug_json(const CellComplex &complex) {
  using nlohmann::json;
  json out;
  out["counts"] = complex.counts();
  json dims = json::array();
  for (int dim = 0; dim <= kMaxDim; ++dim) {
    json cells = json::array();
    for (const Cell &cell: complex.cells(dim)) {
      json boundary = json::array();
      for (const Incidence &inc: cell.boundary)
        boundary.push_back({inc.face, inc.coefficient});
      json rec = {{"id", cell.id},
                  {"kind", std::string(to_string(cell.kind))},
                  {"atoms", cell.atoms},
                  {"bonds", cell.bonds},
                  {"boundary", std::move(boundary)}};
      if (cell.ring >= 0)
        rec["ring"] = cell.ring;
      if (cell.particle >= 0)
        rec["particle"] = cell.particle;
      cells.push_back(std::move(rec));
    }
    dims.push_back(std::move(cells));
  }
  out["cells"] = std::move(dims);
  json comp = json::array();
  for (const auto &c: complex.composition)
    comp.push_back({c.protons, c.neutrons, c.electrons});
  out["composition"] = std::move(comp);
  return out.dump(1);
}

} // namespace cellfeat::lifting
