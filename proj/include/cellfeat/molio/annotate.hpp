//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <array>
#include <vector>

#include "cellfeat/molio/molecule.hpp"

namespace cellfeat::molio {

struct AtomFeatures {
  int degree = 0;
  int aromatic = 0;
  int formal_charge = 0;
  int in_ring = 0;

  bool operator==(const AtomFeatures &) const = default;
};

struct BondFeatures {
  // single, double, triple, aromatic
  std::array<int, 4> order = {0, 0, 0, 0};
  int rotatable = 0;
  int in_ring = 0;

  bool operator==(const BondFeatures &) const = default;
};

struct AnnotatedGraph {
  MolecularGraph graph;
  std::vector<AtomFeatures> atom_features;
  std::vector<BondFeatures> bond_features;
};

// Bonds that are bridges (their removal disconnects the component).
std::vector<bool> find_bridges(const MolecularGraph &graph);

/// A bond is in a ring iff it is not a bridge; an atom is in a ring iff it
/// touches a ring bond. Rotatable: single, acyclic, both endpoints of
/// degree >= 2.
AnnotatedGraph annotate(const MolecularGraph &graph);

} // namespace cellfeat::molio
