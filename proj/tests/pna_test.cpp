//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>

#include <gtest/gtest.h>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/molio/parse.hpp"
#include "cellfeat/pna/pna.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cellfeat;
using namespace cellfeat::pna;

namespace {

// Star: atom 0 bonded to atoms 1..k.
molio::MolecularGraph star(int k) {
  molio::MolecularGraph g;
  for (int i = 0; i <= k; ++i)
    g.add_atom({i, "C", 0, std::nullopt, false});
  for (int i = 1; i <= k; ++i)
    g.add_bond(0, i);
  return g;
}

double block(const Matrix &m, int row, int agg, int scaler, int f = 1, int feature = 0) {
  return m(row, (agg * kScalers + scaler) * f + feature);
}

} // namespace

TEST(Aggregate, HandExample) {
  Matrix h(4, 1);
  h.values = {0, 1, 2, 3};
  const auto out = pna_aggregate(h, star(3), std::log(4.0));
  ASSERT_EQ(out.cols, 12);
  EXPECT_DOUBLE_EQ(block(out, 0, 0, 0), 2.0);
  EXPECT_DOUBLE_EQ(block(out, 0, 1, 0), 1.0);
  EXPECT_DOUBLE_EQ(block(out, 0, 2, 0), 3.0);
  EXPECT_NEAR(block(out, 0, 3, 0), std::sqrt(2.0 / 3.0), 1e-15);
  for (int a = 0; a < kAggregators; ++a) {
    EXPECT_DOUBLE_EQ(block(out, 0, a, 1), block(out, 0, a, 0));
    EXPECT_DOUBLE_EQ(block(out, 0, a, 2), block(out, 0, a, 0));
  }
  // Each leaf sees only the hub.
  for (int a = 0; a < 3; ++a)
    EXPECT_EQ(block(out, 1, a, 0), 0.0);
  EXPECT_EQ(block(out, 1, 3, 0), 0.0);
}

TEST(Aggregate, IsolatedAndSingleNeighbor) {
  molio::MolecularGraph g;
  g.add_atom({0, "C", 0, std::nullopt, false});
  Matrix h(1, 1);
  h.values = {4};
  EXPECT_EQ(pna_aggregate(h, g, 1.0).values, std::vector<double>(12, 0.0));

  Matrix pair(2, 1);
  pair.values = {5, 5};
  const auto out = pna_aggregate(pair, star(1), 1.0);
  EXPECT_EQ(block(out, 0, 0, 0), 5);
  EXPECT_EQ(block(out, 0, 1, 0), 5);
  EXPECT_EQ(block(out, 0, 2, 0), 5);
  EXPECT_EQ(block(out, 0, 3, 0), 0);
}

TEST(Aggregate, Errors) {
  Matrix h(2, 1);
  EXPECT_THROW(pna_aggregate(h, star(2), 1.0), ShapeMismatch);
  Matrix ok(3, 1);
  EXPECT_THROW(pna_aggregate(ok, star(2), 0.0), Error);
  ok.values[0] = std::nan("");
  EXPECT_THROW(pna_aggregate(ok, star(2), 1.0), Error);
}

TEST(Aggregate, MatchesBruteForceAndSerial) {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testkit::random_graph(rng, 1 + static_cast<int>(rng.below(12)),
                                         testkit::uniform(rng, 0.0, 0.6));
    const auto h = testkit::random_features(rng, g.num_atoms(), 1 + static_cast<int>(rng.below(4)));
    const double delta = testkit::uniform(rng, 0.3, 2.0);
    const auto got = pna_aggregate(h, g, delta);
    const auto want = testkit::pna_bruteforce(h, g, delta);
    ASSERT_EQ(got.cols, want.cols);
    for (std::size_t i = 0; i < got.values.size(); ++i)
      EXPECT_NEAR(got.values[i], want.values[i], 1e-12);
    EXPECT_EQ(got, pna_aggregate_serial(h, g, delta));
  }
}

TEST(Aggregate, PermutationEquivariant) {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testkit::random_graph(rng, 2 + static_cast<int>(rng.below(10)), 0.4);
    const int f = 1 + static_cast<int>(rng.below(3));
    const auto h = testkit::random_features(rng, g.num_atoms(), f);
    const auto p = testkit::random_permutation(rng, g.num_atoms());
    Matrix ph(h.rows, f);
    for (int i = 0; i < h.rows; ++i)
      for (int c = 0; c < f; ++c)
        ph(p[i], c) = h(i, c);
    const auto base = pna_aggregate(h, g, 1.0);
    const auto moved = pna_aggregate(ph, g.permuted(p), 1.0);
    for (int i = 0; i < h.rows; ++i)
      for (int c = 0; c < base.cols; ++c)
        ASSERT_EQ(moved(p[i], c), base(i, c));
  }
}

TEST(Forward, Examples) {
  const auto g = star(3);
  PNALayerWeights w;
  w.in_dim = 12;
  w.out_dim = 1;
  w.weight.assign(12, 0.0);
  w.bias = {0.0};
  w.weight[0] = 1.0;  // mean, identity scaler
  Matrix zero(4, 1);
  EXPECT_EQ(pna_forward(zero, g, w, Activation::kIdentity).values,
            std::vector<double>(4, 0.0));

  Matrix h(4, 1);
  h.values = {0, 1, 2, 3};
  const auto means = pna_forward(h, g, w, Activation::kIdentity);
  EXPECT_DOUBLE_EQ(means(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(means(1, 0), 0.0);

  w.bias = {-100.0};
  EXPECT_EQ(pna_forward(h, g, w, Activation::kRelu).values, std::vector<double>(4, 0.0));

  w.weight[3] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(pna_forward(h, g, w, Activation::kRelu), NonFiniteWeights);
  w.in_dim = 24;
  EXPECT_THROW(pna_forward(h, g, w, Activation::kRelu), ShapeMismatch);
}

TEST(Forward, PoolingAndBatchNorm) {
  Matrix h(2, 2);
  h.values = {1, 2, 3, 6};
  EXPECT_EQ(mean_pool(h), (std::vector<double> {2, 4}));
  BatchNormParams p {{2, 4}, {1, 4}, {1, 2}, {0, 1}, 0.0};
  const auto out = batch_norm_inference(h, p);
  EXPECT_DOUBLE_EQ(out(0, 0), -1.0);
  EXPECT_DOUBLE_EQ(out(1, 1), 3.0);
  p.mean.pop_back();
  EXPECT_THROW(batch_norm_inference(h, p), ShapeMismatch);
}

TEST(Weights, JsonRoundTrip) {
  PNALayerWeights w;
  w.in_dim = 12;
  w.out_dim = 2;
  SplitMix64 rng(59);
  for (int i = 0; i < 24; ++i)
    w.weight.push_back(testkit::uniform(rng, -1, 1));
  w.bias = {0.25, -0.5};
  w.delta = 0.75;
  const auto back = parse_weights(to_weights_json(w));
  EXPECT_EQ(back.weight, w.weight);
  EXPECT_EQ(back.bias, w.bias);
  EXPECT_EQ(back.delta, w.delta);
  EXPECT_THROW(parse_weights(R"({"in_dim": 12})"), Error);
}
