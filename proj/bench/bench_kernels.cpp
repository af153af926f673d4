//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Serial reference kernels against their OpenMP counterparts.

#include <vector>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "cellfeat/core/rng.hpp"
#include "cellfeat/ecc/batch.hpp"
#include "cellfeat/molio/parse.hpp"
#include "cellfeat/pna/pna.hpp"
#include "cellfeat/statlab/statlab.hpp"

using namespace cellfeat;

namespace {

const std::vector<molio::MolecularGraph> &molecules() {
  static const std::vector<molio::MolecularGraph> graphs = [] {
    const char *smiles[] = {"CC(=O)Oc1ccccc1C(=O)O", "CN1C=NC2=C1C(=O)N(C(=O)N2C)C",
                            "CC(C)Cc1ccc(cc1)C(C)C(=O)O", "c1ccc2cc3ccccc3cc2c1",
                            "OCC1OC(O)C(O)C(O)C1O", "C12C3C4C1C5C2C3C45",
                            "CCCCCCCCCCCC", "c1ccc(cc1)-c1ccccc1"};
    std::vector<molio::MolecularGraph> out;
    for (int rep = 0; rep < 8; ++rep)
      for (const char *s: smiles)
        out.push_back(molio::parse_smiles(s));
    return out;
  }();
  return graphs;
}

void BM_FeaturizeSerial(benchmark::State &state) {
  const ecc::ECCConfig cfg;
  for (auto _: state)
    benchmark::DoNotOptimize(ecc::featurize_batch_serial(molecules(), cfg));
  state.SetItemsProcessed(state.iterations() * molecules().size());
}

void BM_FeaturizeParallel(benchmark::State &state) {
  const ecc::ECCConfig cfg;
  for (auto _: state)
    benchmark::DoNotOptimize(
        ecc::featurize_batch(molecules(), cfg, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * molecules().size());
}

struct PnaInput {
  molio::MolecularGraph graph;
  pna::Matrix features;
};

const PnaInput &pna_input() {
  static const PnaInput input = [] {
    PnaInput in;
    SplitMix64 rng(1);
    const int n = 2000;
    for (int i = 0; i < n; ++i)
      in.graph.add_atom({i, "C", 0, std::nullopt, false});
    for (int i = 1; i < n; ++i)
      in.graph.add_bond(static_cast<int>(rng.below(i)), i);
    in.features = pna::Matrix(n, 32);
    for (double &v: in.features.values)
      v = static_cast<double>(rng.below(1000)) / 100.0;
    return in;
  }();
  return input;
}

void BM_PnaSerial(benchmark::State &state) {
  const auto &in = pna_input();
  for (auto _: state)
    benchmark::DoNotOptimize(pna::pna_aggregate_serial(in.features, in.graph, 1.0));
}

void BM_PnaParallel(benchmark::State &state) {
  const auto &in = pna_input();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _: state)
    benchmark::DoNotOptimize(pna::pna_aggregate(in.features, in.graph, 1.0));
}

std::pair<std::vector<double>, std::vector<double>> residuals() {
  SplitMix64 rng(2);
  std::vector<double> t(500), p(500);
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = static_cast<double>(rng.below(1000)) / 10.0;
    p[i] = t[i] + static_cast<double>(rng.below(200)) / 100.0 - 1.0;
  }
  return {t, p};
}

void BM_BootstrapSerial(benchmark::State &state) {
  const auto [t, p] = residuals();
  for (auto _: state)
    benchmark::DoNotOptimize(statlab::bootstrap_ci_serial(t, p, statlab::Metric::kRmse, 2000));
}

void BM_BootstrapParallel(benchmark::State &state) {
  const auto [t, p] = residuals();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _: state)
    benchmark::DoNotOptimize(statlab::bootstrap_ci(t, p, statlab::Metric::kRmse, 2000));
}

} // namespace

BENCHMARK(BM_FeaturizeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FeaturizeParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PnaSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PnaParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BootstrapSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BootstrapParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
