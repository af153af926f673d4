//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/ecc/features.hpp"

#include <algorithm>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/molio/canonical.hpp"
#include "cellfeat/spectral/chains.hpp"
#include "cellfeat/spectral/graph_stats.hpp"
#include "cellfeat/spectral/homology.hpp"
#include "cellfeat/spectral/laplacian.hpp"

namespace cellfeat::ecc {

const Segment *ECCVector::segment(std::string_view name) const {
  for (const Segment &s: layout)
    if (s.name == name)
      return &s;
  return nullptr;
}

std::vector<double> ECCVector::slice(std::string_view name) const {
  const Segment *s = segment(name);
  if (s == nullptr)
    throw Error("no segment named " + std::string(name));
  return {values.begin() + s->offset, values.begin() + s->offset + s->length};
}

std::vector<Segment> ecc_layout(const ECCConfig &config) {
  std::vector<Segment> layout;
  int offset = 0;
  auto push = [&](std::string name, int length) {
    layout.push_back({std::move(name), offset, length});
    offset += length;
  };
  push("betti", 4);
  for (int k = 0; k <= 3; ++k)
    push("laplacian_" + std::to_string(k), config.top_k);
  for (int k = 1; k <= 2; ++k)
    push("chains_" + std::to_string(k), config.top_k);
  for (int k = 0; k <= 2; ++k)
    push("centrality_" + std::to_string(k), 3);
  push("apsp", 3);
  push("degree_histogram", config.max_degree + 1);
  return layout;
}

int assembled_length(const ECCConfig &config) {
  const auto layout = ecc_layout(config);
  return layout.back().offset + layout.back().length;
}

void check_config(const ECCConfig &config) {
  if (config.top_k < 1 || config.chain_samples < 1 || config.chain_walk_len < 1
      || config.pad_to < 1 || config.max_degree < 1)
    throw Error("ECC budgets (top_k, chain samples, walk length, pad_to, "
                "max_degree) must all be positive");
  const int needed = assembled_length(config);
  if (config.pad_to < needed)
    throw PadOverflow("assembled length " + std::to_string(needed)
                      + " exceeds pad_to " + std::to_string(config.pad_to));
}

DegreeHistogram degree_histogram(const molio::MolecularGraph &graph,
                                 int max_degree) {
  if (max_degree < 1)
    throw Error("max_degree must be at least 1");
  DegreeHistogram h;
  h.counts.assign(max_degree + 1, 0);
  for (int i = 0; i < graph.num_atoms(); ++i)
    ++h.counts[std::min(graph.degree(i), max_degree)];
  return h;
}

ECCVector ecc_features(const molio::MolecularGraph &input, const ECCConfig &config,
                       const molio::ElementTable &table) {
  check_config(config);

  const molio::MolecularGraph graph =
      config.canonical_order ? molio::canonicalize(input) : input;
  const lifting::CellComplex complex = lifting::lift(graph, config.lift, table);

  ECCVector out;
  out.layout = ecc_layout(config);
  out.values.assign(config.pad_to, 0.0);
  auto write = [&](std::string_view name, const std::vector<double> &data) {
    const Segment *s = out.segment(name);
    std::copy_n(data.begin(), std::min<std::size_t>(data.size(), s->length),
                out.values.begin() + s->offset);
  };

  const auto betti = spectral::betti_numbers(complex);
  write("betti", std::vector<double>(betti.begin(), betti.end()));

  for (int k = 0; k <= 3; ++k)
    write("laplacian_" + std::to_string(k),
          spectral::top_k_eigs(spectral::hodge_laplacian(complex, k), config.top_k)
              .eigenvalues);

  for (int k = 1; k <= 2; ++k) {
    if (complex.count(k) == 0)
      continue;
    const auto chains = spectral::sample_chain_matrix(
        complex, k, config.chain_samples, config.chain_walk_len, config.seed);
    write("chains_" + std::to_string(k),
          spectral::spectral_chains(chains, config.top_k).eigenvalues);
  }

  for (int k = 0; k <= 2; ++k) {
    const auto c = spectral::degree_centrality(complex, k).summary;
    write("centrality_" + std::to_string(k), {c.mean, c.std, c.max});
  }

  const auto paths = spectral::apsp(graph);
  const double n = graph.num_atoms();
  const double pairs = n * (n - 1.0) / 2.0;
  write("apsp", {paths.mean, paths.diameter, pairs > 0 ? paths.wiener / pairs : 0.0});

  const auto hist = degree_histogram(graph, config.max_degree);
  write("degree_histogram", std::vector<double>(hist.counts.begin(), hist.counts.end()));
  return out;
}

} // namespace cellfeat::ecc
