//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cellfeat/molio/molecule.hpp"

namespace cellfeat::pna {

/// Row-major dense matrix; rows are nodes.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), values(static_cast<std::size_t>(r) * c, fill) { }

  double &operator()(int r, int c) { return values[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const {
    return values[static_cast<std::size_t>(r) * cols + c];
  }

  bool operator==(const Matrix &) const = default;
};

inline constexpr int kAggregators = 4;  // mean, min, max, std
inline constexpr int kScalers = 3;      // identity, amplification, attenuation
inline constexpr int kBlocks = kAggregators * kScalers;

// S(d) = log(d + 1) / delta.
double degree_scaler(int degree, double delta);

/// Principal neighbourhood aggregation of node features over the bond graph.
///
/// Output row i has 12 blocks of width f: aggregator-major, scaler-minor,
/// i.e. mean*[1, S, 1/S], min*[...], max*[...], std*[...] with S = S(d_i)
/// and the population standard deviation. Isolated atoms get zeros.
///
/// Throws ShapeMismatch when rows != atoms, Error for delta <= 0 or
/// non-finite features.
Matrix pna_aggregate(const Matrix &features, const molio::MolecularGraph &graph,
                     double delta);

// Single-threaded reference with bit-identical output.
Matrix pna_aggregate_serial(const Matrix &features, const molio::MolecularGraph &graph,
                            double delta);

struct PNALayerWeights {
  int in_dim = 0;   // must be 12 * f
  int out_dim = 0;
  std::vector<double> weight;  // row-major in_dim x out_dim
  std::vector<double> bias;    // out_dim
  double delta = 1.0;
};

enum class Activation { kRelu, kIdentity };

// activation(aggregate(H) * W + bias). Throws ShapeMismatch or
// NonFiniteWeights.
Matrix pna_forward(const Matrix &features, const molio::MolecularGraph &graph,
                   const PNALayerWeights &weights, Activation activation);

// Graph readout: column means.
std::vector<double> mean_pool(const Matrix &features);

struct BatchNormParams {
  std::vector<double> mean;
  std::vector<double> var;
  std::vector<double> gamma;
  std::vector<double> beta;
  double eps = 1e-5;
};

// (x - mean) / sqrt(var + eps) * gamma + beta per column.
Matrix batch_norm_inference(const Matrix &features, const BatchNormParams &params);

/// Weight file (JSON):
///   {"in_dim": 12, "out_dim": 2, "delta": 1.386, "weight": [...], "bias": [...]}
/// `weight` holds in_dim * out_dim row-major values. Shapes are checked
/// strictly; throws ShapeMismatch, NonFiniteWeights or SchemaError.
PNALayerWeights parse_weights(std::string_view text);
PNALayerWeights load_weights(const std::filesystem::path &path);
std::string to_weights_json(const PNALayerWeights &weights);

} // namespace cellfeat::pna
