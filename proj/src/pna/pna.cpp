//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/pna/pna.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cellfeat/core/errors.hpp"

namespace cellfeat::pna {
namespace {

void check_inputs(const Matrix &features, const molio::MolecularGraph &graph,
                  double delta) {
  if (features.rows != graph.num_atoms())
    throw ShapeMismatch("feature rows " + std::to_string(features.rows)
                        + " != atoms " + std::to_string(graph.num_atoms()));
  if (features.values.size() != static_cast<std::size_t>(features.rows) * features.cols)
    throw ShapeMismatch("feature storage does not match its shape");
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw Error("delta must be positive and finite");
  for (double v: features.values)
    if (!std::isfinite(v))
      throw Error("non-finite node feature");
}

// Fills row `node` of `out`.
void aggregate_node(const Matrix &h, const molio::MolecularGraph &graph, double delta,
                    int node, Matrix &out) {
  const int f = h.cols;
  const auto nbrs = graph.neighbors(node);
  const int d = static_cast<int>(nbrs.size());
  double *row = &out.values[static_cast<std::size_t>(node) * out.cols];
  if (d == 0) {
    std::fill(row, row + out.cols, 0.0);
    return;
  }

  const double amp = degree_scaler(d, delta);
  const double scalers[kScalers] = {1.0, amp, 1.0 / amp};

  // Neighbour values are accumulated in ascending order.
  std::vector<double> xs(d);
  for (int c = 0; c < f; ++c) {
    for (int j = 0; j < d; ++j)
      xs[j] = h(nbrs[j].atom, c);
    std::sort(xs.begin(), xs.end());
    double sum = 0.0;
    for (double x: xs)
      sum += x;
    const double lo = xs.front();
    const double hi = xs.back();
    const double mean = sum / d;
    double sq = 0.0;
    for (double x: xs)
      sq += (x - mean) * (x - mean);
    const double aggregates[kAggregators] = {mean, lo, hi, std::sqrt(sq / d)};

    for (int a = 0; a < kAggregators; ++a)
      for (int s = 0; s < kScalers; ++s)
        row[(a * kScalers + s) * f + c] = aggregates[a] * scalers[s];
  }
}

} // namespace

double degree_scaler(int degree, double delta) {
  return std::log(static_cast<double>(degree) + 1.0) / delta;
}

Matrix pna_aggregate(const Matrix &features, const molio::MolecularGraph &graph,
                     double delta) {
  check_inputs(features, graph, delta);
  Matrix out(features.rows, kBlocks * features.cols);
  const int n = features.rows;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i)
    aggregate_node(features, graph, delta, i, out);
  return out;
}

Matrix pna_aggregate_serial(const Matrix &features, const molio::MolecularGraph &graph,
                            double delta) {
  check_inputs(features, graph, delta);
  Matrix out(features.rows, kBlocks * features.cols);
  for (int i = 0; i < features.rows; ++i)
    aggregate_node(features, graph, delta, i, out);
  return out;
}

Matrix pna_forward(const Matrix &features, const molio::MolecularGraph &graph,
                   const PNALayerWeights &weights, Activation activation) {
  if (weights.in_dim != kBlocks * features.cols)
    throw ShapeMismatch("weights expect in_dim " + std::to_string(weights.in_dim)
                        + ", aggregation yields " + std::to_string(kBlocks * features.cols));
  if (weights.weight.size() != static_cast<std::size_t>(weights.in_dim) * weights.out_dim
      || weights.bias.size() != static_cast<std::size_t>(weights.out_dim))
    throw ShapeMismatch("weight or bias size does not match in_dim x out_dim");
  for (double v: weights.weight)
    if (!std::isfinite(v))
      throw NonFiniteWeights("non-finite weight");
  for (double v: weights.bias)
    if (!std::isfinite(v))
      throw NonFiniteWeights("non-finite bias");
  if (!std::isfinite(weights.delta))
    throw NonFiniteWeights("non-finite delta");

  const Matrix agg = pna_aggregate(features, graph, weights.delta);
  Matrix out(agg.rows, weights.out_dim);
  for (int i = 0; i < agg.rows; ++i) {
    for (int o = 0; o < weights.out_dim; ++o) {
      double acc = weights.bias[o];
      for (int k = 0; k < agg.cols; ++k)
        acc += agg(i, k) * weights.weight[static_cast<std::size_t>(k) * weights.out_dim + o];
      out(i, o) = activation == Activation::kRelu ? std::max(acc, 0.0) : acc;
    }
  }
  return out;
}

std::vector<double> mean_pool(const Matrix &features) {
  std::vector<double> out(features.cols, 0.0);
  if (features.rows == 0)
    return out;
  for (int i = 0; i < features.rows; ++i)
    for (int c = 0; c < features.cols; ++c)
      out[c] += features(i, c);
  for (double &v: out)
    v /= features.rows;
  return out;
}

Matrix batch_norm_inference(const Matrix &features, const BatchNormParams &p) {
  const auto cols = static_cast<std::size_t>(features.cols);
  if (p.mean.size() != cols || p.var.size() != cols || p.gamma.size() != cols
      || p.beta.size() != cols)
    throw ShapeMismatch("batch-norm parameter length does not match feature width");
  Matrix out(features.rows, features.cols);
  for (int i = 0; i < features.rows; ++i)
    for (int c = 0; c < features.cols; ++c)
      out(i, c) = (features(i, c) - p.mean[c]) / std::sqrt(p.var[c] + p.eps) * p.gamma[c]
                  + p.beta[c];
  return out;
}

} // namespace cellfeat::pna
