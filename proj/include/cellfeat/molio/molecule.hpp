//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellfeat::molio {

enum class BondOrder { kSingle = 0, kDouble = 1, kTriple = 2, kAromatic = 3 };

std::string_view to_string(BondOrder order);
std::optional<BondOrder> bond_order_from_string(std::string_view name);

struct Atom {
  int index = 0;
  std::string element;
  int formal_charge = 0;
  std::optional<int> isotope;
  bool aromatic = false;

  bool operator==(const Atom &) const = default;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::kSingle;

  int other(int atom) const noexcept { return atom == a ? b : a; }

  bool operator==(const Bond &) const = default;
};

struct Neighbor {
  int atom;
  int bond;

  bool operator==(const Neighbor &) const = default;
};

/// Simple undirected molecular graph: atoms are vertices, bonds are edges.
/// The graph stays simple at all times; add_bond() rejects self-loops,
/// out-of-range endpoints (InvalidGraph) and parallel bonds (DuplicateBond).
class MolecularGraph {
public:
  MolecularGraph() = default;

  // The atom's index field is overwritten with its position.
  int add_atom(Atom atom);
  int add_bond(int a, int b, BondOrder order = BondOrder::kSingle);

  int num_atoms() const noexcept { return static_cast<int>(atoms_.size()); }
  int num_bonds() const noexcept { return static_cast<int>(bonds_.size()); }
  bool empty() const noexcept { return atoms_.empty(); }

  const std::vector<Atom> &atoms() const noexcept { return atoms_; }
  const std::vector<Bond> &bonds() const noexcept { return bonds_; }
  const Atom &atom(int i) const { return atoms_[i]; }
  const Bond &bond(int i) const { return bonds_[i]; }

  // Sorted by neighbor atom index.
  std::span<const Neighbor> neighbors(int atom) const {
    return adjacency_[atom];
  }
  int degree(int atom) const {
    return static_cast<int>(adjacency_[atom].size());
  }

  std::optional<int> find_bond(int a, int b) const;

  // Relabels atoms: new_index[old] = new. Bonds are reordered by their
  // (min, max) endpoint pair under the new labels.
  MolecularGraph permuted(std::span<const int> new_index) const;

  int count_components() const;

  bool operator==(const MolecularGraph &other) const {
    return atoms_ == other.atoms_ && bonds_ == other.bonds_;
  }

private:
  std::vector<Atom> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

} // namespace cellfeat::molio
