//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstddef>
#include <vector>

#include "cellfeat/molio/molecule.hpp"

namespace cellfeat::molio {

struct CanonicalOrder {
  // new_index[old] = new
  std::vector<int> new_index;
  // False when the search budget ran out before the tree was exhausted; the
  // labeling is still deterministic but may depend on the input order.
  bool complete = true;
};

/// Canonical atom labeling by colour refinement with individualization.
/// Initial colours come from (element, charge, isotope, aromatic, degree);
/// the labeling whose bond list is lexicographically smallest wins. Two
/// isomorphic graphs map to identical canonical graphs whenever the search
/// completes.
CanonicalOrder canonical_order(const MolecularGraph &graph,
                               std::size_t node_budget = 200000);

MolecularGraph canonicalize(const MolecularGraph &graph);

} // namespace cellfeat::molio
