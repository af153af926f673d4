//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/ecc/batch.hpp"

#include <omp.h>

namespace cellfeat::ecc {
namespace {

void featurize_one(const molio::MolecularGraph &graph, const ECCConfig &config,
                   std::optional<ECCVector> &slot, std::string &error) {
  try {
    slot = ecc_features(graph, config);
  } catch (const std::exception &e) {
    error = e.what();
  }
}

BatchResult make_result(std::size_t n) {
  BatchResult r;
  r.vectors.resize(n);
  r.errors.resize(n);
  return r;
}

} // namespace

BatchResult featurize_batch(std::span<const molio::MolecularGraph> graphs,
                            const ECCConfig &config, int jobs) {
  BatchResult result = make_result(graphs.size());
  const long n = static_cast<long>(graphs.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < n; ++i)
    featurize_one(graphs[i], config, result.vectors[i], result.errors[i]);

  return result;
}

BatchResult featurize_batch_serial(std::span<const molio::MolecularGraph> graphs,
                                   const ECCConfig &config) {
  BatchResult result = make_result(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    featurize_one(graphs[i], config, result.vectors[i], result.errors[i]);
  return result;
}

} // namespace cellfeat::ecc
