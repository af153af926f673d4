//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cellfeat::ecc {

struct FeatureRecord {
  std::string id;
  std::vector<double> values;

  bool operator==(const FeatureRecord &) const = default;
};

/// Binary feature file, all integers little-endian:
///
///   "ECC1"                      4 bytes magic
///   record count                u64
///   pad_to                      u64  (0 for an empty file)
///   per record:
///     id length                 u32
///     id bytes                  UTF-8, no terminator
///     values                    pad_to x IEEE-754 binary64
///
/// write_features throws LengthMismatch when records disagree on length;
/// read_features throws FormatVersionMismatch on a bad magic and
/// LengthMismatch on truncated or oversized input.
void write_features(std::ostream &out, std::span<const FeatureRecord> records);
void write_features(const std::filesystem::path &path,
                    std::span<const FeatureRecord> records);

std::vector<FeatureRecord> read_features(std::istream &in);
std::vector<FeatureRecord> read_features(const std::filesystem::path &path);

// Human-readable JSON mirror of the binary content. Doubles use the shortest
// representation that parses back to the same bits.
std::string features_to_json(std::span<const FeatureRecord> records);

} // namespace cellfeat::ecc
