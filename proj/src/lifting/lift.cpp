//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/lifting/lift.hpp"

#include <algorithm>

#include "cellfeat/core/errors.hpp"

namespace cellfeat::lifting {
namespace {

std::vector<Incidence> doubled_faces(int num_atoms, const std::vector<int> &bonds) {
  std::vector<int> sorted = bonds;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Incidence> out;
  out.reserve(2 * sorted.size());
  for (int b: sorted) {
    out.push_back({num_atoms + 2 * b, 1});
    out.push_back({num_atoms + 2 * b + 1, 1});
  }
  return out;
}

} // namespace

CellComplex lift(const molio::MolecularGraph &graph, const LiftConfig &config,
                 const molio::ElementTable &table) {
  if (config.khop < 0)
    throw Error("khop must be non-negative");
  if (config.ring_size_max < 3)
    throw Error("ring_size_max must be at least 3");

  const int n = graph.num_atoms();
  CellComplex x;
  x.composition.reserve(n);

  for (const molio::Atom &atom: graph.atoms()) {
    x.composition.push_back(molio::element_composition(
        atom.element, atom.formal_charge, atom.isotope, table));
    for (int p = 0; p < 3; ++p) {
      Cell point;
      point.dim = 0;
      point.kind = CellKind::kParticlePoint;
      point.atoms = {atom.index};
      point.particle = p;
      x.add_cell(std::move(point));
    }
  }

  // Shell triangle p -> n -> e -> p; edge t goes from point t to t+1 mod 3.
  for (int a = 0; a < n; ++a) {
    for (int t = 0; t < 3; ++t) {
      Cell edge;
      edge.dim = 1;
      edge.kind = CellKind::kAtomShellEdge;
      edge.atoms = {a};
      edge.particle = t;
      edge.boundary = {{3 * a + t, -1}, {3 * a + (t + 1) % 3, 1}};
      std::sort(edge.boundary.begin(), edge.boundary.end(),
                [](const Incidence &p, const Incidence &q) { return p.face < q.face; });
      x.add_cell(std::move(edge));
    }
  }
  for (int b = 0; b < graph.num_bonds(); ++b) {
    const molio::Bond &bond = graph.bond(b);
    const int lo = std::min(bond.a, bond.b), hi = std::max(bond.a, bond.b);
    for (int copy = 0; copy < 2; ++copy) {
      Cell edge;
      edge.dim = 1;
      edge.kind = CellKind::kBondLinkEdge;
      edge.atoms = {lo, hi};
      edge.bonds = {b};
      edge.boundary = {{3 * lo + 2, -1}, {3 * hi + 2, 1}};
      x.add_cell(std::move(edge));
    }
  }

  for (int a = 0; a < n; ++a) {
    Cell disk;
    disk.dim = 2;
    disk.kind = CellKind::kAtomDisk;
    disk.atoms = {a};
    disk.boundary = {{3 * a, 1}, {3 * a + 1, 1}, {3 * a + 2, 1}};
    x.add_cell(std::move(disk));
  }
  for (int b = 0; b < graph.num_bonds(); ++b) {
    const molio::Bond &bond = graph.bond(b);
    const int u = 3 * n + 2 * b, v = u + 1;
    for (int copy = 0; copy < 2; ++copy) {
      Cell face;
      face.dim = 2;
      face.kind = CellKind::kBondFace;
      face.atoms = {std::min(bond.a, bond.b), std::max(bond.a, bond.b)};
      face.bonds = {b};
      const int sign = copy == 0 ? 1 : -1;
      face.boundary = {{u, sign}, {v, -sign}};
      x.add_cell(std::move(face));
    }
  }

  if (config.include_rings) {
    const auto rings = chordless_cycles(graph, config.ring_size_max);
    for (std::size_t r = 0; r < rings.size(); ++r) {
      const auto &ring = rings[r];
      Cell volume;
      volume.dim = 3;
      volume.kind = CellKind::kRingVolume;
      volume.atoms = ring;
      volume.ring = static_cast<int>(r);
      for (std::size_t i = 0; i < ring.size(); ++i)
        volume.bonds.push_back(*graph.find_bond(ring[i], ring[(i + 1) % ring.size()]));
      volume.boundary = doubled_faces(n, volume.bonds);
      x.add_cell(std::move(volume));
    }
  }

  for (KhopPath &path: khop_paths(graph, config.khop)) {
    Cell volume;
    volume.dim = 3;
    volume.kind = CellKind::kKhopVolume;
    volume.atoms = {path.source, path.target};
    volume.bonds = std::move(path.bonds);
    volume.boundary = doubled_faces(n, volume.bonds);
    x.add_cell(std::move(volume));
  }

  return x;
}

} // namespace cellfeat::lifting
