//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/pna/pna.hpp"

namespace cellfeat::pna {

PNALayerWeights parse_weights(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw SchemaError("$", "top level must be an object");
  for (const auto &[key, _]: doc.items())
    if (key != "in_dim" && key != "out_dim" && key != "delta" && key != "weight"
        && key != "bias")
      throw SchemaError(key, "unknown field");

  auto get_int = [&](const char *key) {
    if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long>() < 1)
      throw SchemaError(key, "expected a positive integer");
    return doc[key].get<int>();
  };
  auto get_list = [&](const char *key) {
    if (!doc.contains(key) || !doc[key].is_array())
      throw SchemaError(key, "expected a list of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < doc[key].size(); ++i) {
      const json &v = doc[key][i];
      if (v.is_null())
        throw NonFiniteWeights(std::string(key) + "[" + std::to_string(i) + "] is not finite");
      if (!v.is_number())
        throw SchemaError(std::string(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(v.get<double>());
    }
    return out;
  };

  PNALayerWeights w;
  w.in_dim = get_int("in_dim");
  w.out_dim = get_int("out_dim");
  if (w.in_dim % kBlocks != 0)
    throw ShapeMismatch("in_dim must be a multiple of 12");
  if (!doc.contains("delta") || !doc["delta"].is_number())
    throw SchemaError("delta", "expected a number");
  w.delta = doc["delta"].get<double>();
  if (!(w.delta > 0.0) || !std::isfinite(w.delta))
    throw SchemaError("delta", "must be positive and finite");
  w.weight = get_list("weight");
  w.bias = get_list("bias");
  if (w.weight.size() != static_cast<std::size_t>(w.in_dim) * w.out_dim)
    throw ShapeMismatch("weight has " + std::to_string(w.weight.size()) + " values, expected "
                        + std::to_string(static_cast<long>(w.in_dim) * w.out_dim));
  if (w.bias.size() != static_cast<std::size_t>(w.out_dim))
    throw ShapeMismatch("bias has " + std::to_string(w.bias.size()) + " values, expected "
                        + std::to_string(w.out_dim));
  for (double v: w.weight)
    if (!std::isfinite(v))
      throw NonFiniteWeights("non-finite weight");
  for (double v: w.bias)
    if (!std::isfinite(v))
      throw NonFiniteWeights("non-finite bias");
  return w;
}

PNALayerWeights load_weights(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open weight file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_weights(buf.str());
}

std::string to_weights_json(const PNALayerWeights &w) {
  nlohmann::json doc = {{"in_dim", w.in_dim},   {"out_dim", w.out_dim},
                        {"delta", w.delta},     {"weight", w.weight},
                        {"bias", w.bias}};
  return doc.dump();
}

} // namespace cellfeat::pna
