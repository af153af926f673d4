//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cellfeat/lifting/lift.hpp"
#include "cellfeat/molio/element_table.hpp"
#include "cellfeat/molio/molecule.hpp"

namespace cellfeat::ecc {

struct ECCConfig {
  int top_k = 8;
  int chain_samples = 64;
  int chain_walk_len = 8;
  std::uint64_t seed = 42;
  int pad_to = 96;
  lifting::LiftConfig lift;
  int max_degree = 6;
  // Relabel atoms canonically before lifting.
  bool canonical_order = true;
};

struct Segment {
  std::string name;
  int offset = 0;
  int length = 0;

  bool operator==(const Segment &) const = default;
};

struct ECCVector {
  std::vector<double> values;
  std::vector<Segment> layout;

  const Segment *segment(std::string_view name) const;
  std::vector<double> slice(std::string_view name) const;
};

/// Segment layout, in order:
///   betti (4) | laplacian_0..3 (top_k each) | chains_1, chains_2 (top_k
///   each) | centrality_0..2 (mean, std, max) | apsp (mean, diameter,
///   wiener / pairs) | degree_histogram (max_degree + 1)
/// With the defaults this is 4 + 32 + 16 + 9 + 3 + 7 = 71 values.
std::vector<Segment> ecc_layout(const ECCConfig &config);
int assembled_length(const ECCConfig &config);

// Throws Error for non-positive budgets and PadOverflow when pad_to is too
// small for the layout.
void check_config(const ECCConfig &config);

struct DegreeHistogram {
  // counts[d] = atoms of degree d; the last bin also takes higher degrees.
  std::vector<int> counts;
};

DegreeHistogram degree_histogram(const molio::MolecularGraph &graph, int max_degree);

ECCVector ecc_features(const molio::MolecularGraph &graph, const ECCConfig &config = {},
                       const molio::ElementTable &table = molio::ElementTable::defaults());

} // namespace cellfeat::ecc
