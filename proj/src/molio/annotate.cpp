//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/molio/annotate.hpp"

#include <algorithm>

namespace cellfeat::molio {

std::vector<bool> find_bridges(const MolecularGraph &graph) {
  const int n = graph.num_atoms();
  std::vector<bool> bridge(graph.num_bonds(), false);
  std::vector<int> order(n, -1), low(n, 0);

  struct Frame {
    int atom;
    int parent_bond;
    std::size_t next;
  };

  int counter = 0;
  std::vector<Frame> stack;
  for (int root = 0; root < n; ++root) {
    if (order[root] >= 0)
      continue;
    order[root] = low[root] = counter++;
    stack.push_back({root, -1, 0});

    while (!stack.empty()) {
      Frame &top = stack.back();
      auto nbrs = graph.neighbors(top.atom);
      if (top.next < nbrs.size()) {
        const Neighbor nb = nbrs[top.next++];
        if (nb.bond == top.parent_bond)
          continue;
        if (order[nb.atom] < 0) {
          order[nb.atom] = low[nb.atom] = counter++;
          stack.push_back({nb.atom, nb.bond, 0});
        } else {
          low[top.atom] = std::min(low[top.atom], order[nb.atom]);
        }
        continue;
      }

      const Frame done = top;
      stack.pop_back();
      if (!stack.empty()) {
        const int parent = stack.back().atom;
        low[parent] = std::min(low[parent], low[done.atom]);
        if (low[done.atom] > order[parent])
          bridge[done.parent_bond] = true;
      }
    }
  }
  return bridge;
}

AnnotatedGraph annotate(const MolecularGraph &graph) {
  AnnotatedGraph out;
  out.graph = graph;
  out.atom_features.resize(graph.num_atoms());
  out.bond_features.resize(graph.num_bonds());

  const std::vector<bool> bridge = find_bridges(graph);

  for (int i = 0; i < graph.num_atoms(); ++i) {
    AtomFeatures &f = out.atom_features[i];
    f.degree = graph.degree(i);
    f.aromatic = graph.atom(i).aromatic ? 1 : 0;
    f.formal_charge = graph.atom(i).formal_charge;
  }

  for (int e = 0; e < graph.num_bonds(); ++e) {
    const Bond &bond = graph.bond(e);
    BondFeatures &f = out.bond_features[e];
    f.order[static_cast<int>(bond.order)] = 1;
    f.in_ring = bridge[e] ? 0 : 1;
    f.rotatable = bond.order == BondOrder::kSingle && !f.in_ring
                          && graph.degree(bond.a) >= 2 && graph.degree(bond.b) >= 2
                      ? 1
                      : 0;
    if (f.in_ring) {
      out.atom_features[bond.a].in_ring = 1;
      out.atom_features[bond.b].in_ring = 1;
    }
  }
  return out;
}

} // namespace cellfeat::molio
