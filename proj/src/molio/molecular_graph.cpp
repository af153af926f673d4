//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/molio/molecule.hpp"

#include <algorithm>
#include <numeric>

#include "cellfeat/core/errors.hpp"

namespace cellfeat::molio {

std::string_view to_string(BondOrder order) {
  switch (order) {
  case BondOrder::kSingle:
    return "single";
  case BondOrder::kDouble:
    return "double";
  case BondOrder::kTriple:
    return "triple";
  case BondOrder::kAromatic:
    return "aromatic";
  }
  return "single";
}

std::optional<BondOrder> bond_order_from_string(std::string_view name) {
  if (name == "single")
    return BondOrder::kSingle;
  if (name == "double")
    return BondOrder::kDouble;
  if (name == "triple")
    return BondOrder::kTriple;
  if (name == "aromatic")
    return BondOrder::kAromatic;
  return std::nullopt;
}

int MolecularGraph::add_atom(Atom atom) {
  atom.index = num_atoms();
  atoms_.push_back(std::move(atom));
  adjacency_.emplace_back();
  return atoms_.back().index;
}

int MolecularGraph::add_bond(int a, int b, BondOrder order) {
  if (a < 0 || b < 0 || a >= num_atoms() || b >= num_atoms())
    throw InvalidGraph("bond endpoint out of range");
  if (a == b)
    throw InvalidGraph("self-loop on atom " + std::to_string(a));
  if (find_bond(a, b))
    throw DuplicateBond(a, b);

  const int id = num_bonds();
  bonds_.push_back({a, b, order});

  auto insert = [this](int at, Neighbor nb) {
    auto &list = adjacency_[at];
    auto pos = std::lower_bound(
        list.begin(), list.end(), nb,
        [](const Neighbor &x, const Neighbor &y) { return x.atom < y.atom; });
    list.insert(pos, nb);
  };
  insert(a, {b, id});
  insert(b, {a, id});
  return id;
}

std::optional<int> MolecularGraph::find_bond(int a, int b) const {
  if (a < 0 || a >= num_atoms())
    return std::nullopt;
  const auto &list = adjacency_[a];
  auto it = std::lower_bound(
      list.begin(), list.end(), b,
      [](const Neighbor &x, int atom) { return x.atom < atom; });
  if (it != list.end() && it->atom == b)
    return it->bond;
  return std::nullopt;
}

MolecularGraph MolecularGraph::permuted(std::span<const int> new_index) const {
  if (static_cast<int>(new_index.size()) != num_atoms())
    throw InvalidGraph("permutation size does not match atom count");

  std::vector<int> old_of(num_atoms(), -1);
  for (int i = 0; i < num_atoms(); ++i) {
    const int j = new_index[i];
    if (j < 0 || j >= num_atoms() || old_of[j] != -1)
      throw InvalidGraph("not a permutation");
    old_of[j] = i;
  }

  MolecularGraph out;
  for (int j = 0; j < num_atoms(); ++j)
    out.add_atom(atoms_[old_of[j]]);

  std::vector<Bond> relabeled;
  relabeled.reserve(bonds_.size());
  for (const Bond &bond: bonds_) {
    int a = new_index[bond.a], b = new_index[bond.b];
    if (a > b)
      std::swap(a, b);
    relabeled.push_back({a, b, bond.order});
  }
  std::sort(relabeled.begin(), relabeled.end(),
            [](const Bond &x, const Bond &y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
  for (const Bond &bond: relabeled)
    out.add_bond(bond.a, bond.b, bond.order);
  return out;
}

int MolecularGraph::count_components() const {
  std::vector<int> parent(num_atoms());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = num_atoms();
  for (const Bond &bond: bonds_) {
    int ra = find(bond.a), rb = find(bond.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components;
}

} // namespace cellfeat::molio
