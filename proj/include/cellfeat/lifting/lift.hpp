//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <vector>

#include "cellfeat/lifting/cell_complex.hpp"
#include "cellfeat/molio/element_table.hpp"
#include "cellfeat/molio/molecule.hpp"

namespace cellfeat::lifting {

struct LiftConfig {
  bool include_rings = true;
  // Atom pairs at exactly this distance get a 3-cell; values below 2 disable.
  int khop = 0;
  int ring_size_max = 8;
};

/// Chordless cycles with at most `max_size` atoms. Each cycle starts at its
/// smallest atom and runs towards the smaller of that atom's two ring
/// neighbours; cycles are sorted by (size, atom sequence).
std::vector<std::vector<int>> chordless_cycles(const molio::MolecularGraph &graph,
                                               int max_size);

/// Atom pairs (i < j) at distance exactly k, with the bonds of the path that
/// always steps to the lowest-index neighbour one hop closer to j.
struct KhopPath {
  int source;
  int target;
  std::vector<int> bonds;
};
std::vector<KhopPath> khop_paths(const molio::MolecularGraph &graph, int k);

/// Lifts a molecular graph to a 3-dimensional cell complex.
///
/// For every atom a: points p_a, n_a, e_a (ids 3a, 3a+1, 3a+2); shell edges
/// p->n, n->e, e->p (ids 3a..3a+2); one disk with boundary equal to the sum
/// of its three shell edges (id a).
/// For bond b = (x, y), x < y, with N atoms: link edges u_b, v_b from e_x to
/// e_y (ids 3N+2b, 3N+2b+1); faces F_b = u_b - v_b and F'_b = v_b - u_b
/// (ids N+2b, N+2b+1). F_b + F'_b is a 2-cycle.
/// Each chordless ring and each k-hop path contributes a 3-cell bounded by
/// the sum of F_b + F'_b over its bonds; rings come first.
///
/// Throws UnknownElement when an atom is missing from the table.
CellComplex lift(const molio::MolecularGraph &graph, const LiftConfig &config = {},
                 const molio::ElementTable &table = molio::ElementTable::defaults());

} // namespace cellfeat::lifting
