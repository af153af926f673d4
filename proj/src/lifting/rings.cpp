//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <deque>
#include <limits>

#include "cellfeat/lifting/lift.hpp"

namespace cellfeat::lifting {
namespace {

class ChordlessSearch {
public:
  ChordlessSearch(const molio::MolecularGraph &g, int max_size)
      : g_(g), max_size_(max_size), on_path_(g.num_atoms(), false) { }

  std::vector<std::vector<int>> run() {
    for (int s = 0; s < g_.num_atoms(); ++s) {
      path_ = {s};
      on_path_[s] = true;
      for (const molio::Neighbor &nb: g_.neighbors(s)) {
        if (nb.atom <= s)
          continue;
        push(nb.atom);
        extend();
        pop();
      }
      on_path_[s] = false;
    }
    std::sort(out_.begin(), out_.end(), [](const auto &x, const auto &y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return std::move(out_);
  }

private:
  bool adjacent(int x, int y) const { return g_.find_bond(x, y).has_value(); }

  void push(int v) {
    path_.push_back(v);
    on_path_[v] = true;
  }
  void pop() {
    on_path_[path_.back()] = false;
    path_.pop_back();
  }

  // path_ = [s, v1, ..., last] is an induced path with every vertex > s.
  void extend() {
    const int s = path_.front();
    const int last = path_.back();
    const int len = static_cast<int>(path_.size());
    for (const molio::Neighbor &nb: g_.neighbors(last)) {
      const int w = nb.atom;
      if (w <= s || on_path_[w])
        continue;
      bool chord = false;
      for (int i = 1; i + 1 < len && !chord; ++i)
        chord = adjacent(w, path_[i]);
      if (chord)
        continue;
      if (adjacent(w, s)) {
        if (path_[1] < w && len + 1 <= max_size_) {
          auto cycle = path_;
          cycle.push_back(w);
          out_.push_back(std::move(cycle));
        }
        continue;
      }
      if (len + 2 <= max_size_) {
        push(w);
        extend();
        pop();
      }
    }
  }

  const molio::MolecularGraph &g_;
  int max_size_;
  std::vector<bool> on_path_;
  std::vector<int> path_;
  std::vector<std::vector<int>> out_;
};

std::vector<int> bfs_distances(const molio::MolecularGraph &g, int source) {
  std::vector<int> dist(g.num_atoms(), -1);
  std::deque<int> queue {source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const molio::Neighbor &nb: g.neighbors(v)) {
      if (dist[nb.atom] < 0) {
        dist[nb.atom] = dist[v] + 1;
        queue.push_back(nb.atom);
      }
    }
  }
  return dist;
}

} // namespace

std::vector<std::vector<int>> chordless_cycles(const molio::MolecularGraph &graph,
                                               int max_size) {
  if (max_size < 3)
    return {};
  return ChordlessSearch(graph, max_size).run();
}

std::vector<KhopPath> khop_paths(const molio::MolecularGraph &graph, int k) {
  std::vector<KhopPath> out;
  if (k < 2)
    return out;
  const int n = graph.num_atoms();
  std::vector<std::vector<int>> dist(n);
  for (int v = 0; v < n; ++v)
    dist[v] = bfs_distances(graph, v);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j] != k)
        continue;
      KhopPath path {i, j, {}};
      int at = i;
      while (at != j) {
        // Neighbours are sorted, so the first hit is the lowest index.
        for (const molio::Neighbor &nb: graph.neighbors(at)) {
          if (dist[j][nb.atom] == dist[j][at] - 1) {
            path.bonds.push_back(nb.bond);
            at = nb.atom;
            break;
          }
        }
      }
      out.push_back(std::move(path));
    }
  }
  return out;
}

} // namespace cellfeat::lifting
