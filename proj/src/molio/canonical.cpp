//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/molio/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

namespace cellfeat::molio {
namespace {

using Colouring = std::vector<int>;

// Atom-level invariant; the certificate starts with these so two labelings
// are only compared on their bonds once the atom sequence matches.
using AtomKey = std::tuple<std::string, int, int, bool, int>;

AtomKey atom_key(const MolecularGraph &g, int i) {
  const Atom &a = g.atom(i);
  return {a.element, a.formal_charge, a.isotope.value_or(0), a.aromatic,
          g.degree(i)};
}

// Replaces the values of `keys` by their dense rank. Ranks respect the key
// order so relabeling the input never changes which class sorts first.
template <class Key>
Colouring dense_rank(const std::vector<Key> &keys) {
  std::vector<int> idx(keys.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int x, int y) { return keys[x] < keys[y]; });
  Colouring colour(keys.size());
  int rank = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || keys[idx[i - 1]] < keys[idx[i]])
      ++rank;
    colour[idx[i]] = rank;
  }
  return colour;
}

int count_classes(const Colouring &c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Colouring refine(const MolecularGraph &g, Colouring colour) {
  const int n = g.num_atoms();
  int classes = count_classes(colour);
  while (true) {
    using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (const Neighbor &nb: g.neighbors(v))
        sig[v].second.emplace_back(colour[nb.atom],
                                   static_cast<int>(g.bond(nb.bond).order));
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    Colouring next = dense_rank(sig);
    const int next_classes = count_classes(next);
    colour = std::move(next);
    if (next_classes == classes)
      return colour;
    classes = next_classes;
  }
}

using Certificate = std::vector<std::tuple<int, int, int>>;

Certificate certificate(const MolecularGraph &g, const Colouring &label) {
  Certificate cert;
  cert.reserve(g.num_bonds());
  for (const Bond &b: g.bonds()) {
    int x = label[b.a], y = label[b.b];
    if (x > y)
      std::swap(x, y);
    cert.emplace_back(x, y, static_cast<int>(b.order));
  }
  std::sort(cert.begin(), cert.end());
  return cert;
}

class Search {
public:
  Search(const MolecularGraph &g, std::size_t budget): g_(g), budget_(budget) { }

  void run(const Colouring &colour) {
    if (exhausted())
      return;
    ++nodes_;
    const int n = g_.num_atoms();
    if (count_classes(colour) == n) {
      Certificate cert = certificate(g_, colour);
      if (!best_cert_ || cert < *best_cert_) {
        best_cert_ = std::move(cert);
        best_ = colour;
      }
      return;
    }

    // First colour class with more than one member.
    std::vector<int> size(n, 0);
    for (int c: colour)
      ++size[c];
    int target = 0;
    while (size[target] < 2)
      ++target;

    for (int v = 0; v < n; ++v) {
      if (colour[v] != target)
        continue;
      std::vector<std::pair<int, int>> keys(n);
      for (int u = 0; u < n; ++u)
        keys[u] = {colour[u], u == v ? 0 : 1};
      run(refine(g_, dense_rank(keys)));
      if (exhausted())
        return;
    }
  }

  bool exhausted() const { return best_cert_.has_value() && nodes_ >= budget_; }
  const Colouring &best() const { return best_; }

private:
  const MolecularGraph &g_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::optional<Certificate> best_cert_;
  Colouring best_;
};

} // namespace

CanonicalOrder canonical_order(const MolecularGraph &graph,
                               std::size_t node_budget) {
  const int n = graph.num_atoms();
  CanonicalOrder out;
  if (n == 0)
    return out;

  std::vector<AtomKey> keys(n);
  for (int i = 0; i < n; ++i)
    keys[i] = atom_key(graph, i);

  Search search(graph, std::max<std::size_t>(node_budget, 1));
  search.run(refine(graph, dense_rank(keys)));
  out.new_index = search.best();
  out.complete = !search.exhausted();
  return out;
}

MolecularGraph canonicalize(const MolecularGraph &graph) {
  return graph.permuted(canonical_order(graph).new_index);
}

} // namespace cellfeat::molio
