//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/ecc/feature_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "cellfeat/core/errors.hpp"

namespace cellfeat::ecc {
namespace {

constexpr char kMagic[4] = {'E', 'C', 'C', '1'};

template <class UInt>
void put_le(std::ostream &out, UInt value) {
  char bytes[sizeof(UInt)];
  for (std::size_t i = 0; i < sizeof(UInt); ++i)
    bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  out.write(bytes, sizeof(UInt));
}

template <class UInt>
UInt get_le(std::istream &in) {
  unsigned char bytes[sizeof(UInt)];
  if (!in.read(reinterpret_cast<char *>(bytes), sizeof(UInt)))
    throw LengthMismatch("feature file is truncated");
  UInt value = 0;
  for (std::size_t i = 0; i < sizeof(UInt); ++i)
    value |= static_cast<UInt>(bytes[i]) << (8 * i);
  return value;
}

} // namespace

void write_features(std::ostream &out, std::span<const FeatureRecord> records) {
  const std::size_t pad_to = records.empty() ? 0 : records.front().values.size();
  for (const FeatureRecord &r: records)
    if (r.values.size() != pad_to)
      throw LengthMismatch("record '" + r.id + "' has " + std::to_string(r.values.size())
                           + " values, expected " + std::to_string(pad_to));

  out.write(kMagic, sizeof(kMagic));
  put_le<std::uint64_t>(out, records.size());
  put_le<std::uint64_t>(out, pad_to);
  for (const FeatureRecord &r: records) {
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(r.id.size()));
    out.write(r.id.data(), static_cast<std::streamsize>(r.id.size()));
    for (double v: r.values)
      put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(v));
  }
}

void write_features(const std::filesystem::path &path,
                    std::span<const FeatureRecord> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error("cannot open " + path.string() + " for writing");
  write_features(out, records);
  out.flush();
  if (!out)
    throw Error("failed writing " + path.string());
}

std::vector<FeatureRecord> read_features(std::istream &in) {
  char magic[4];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw FormatVersionMismatch("not an ECC1 feature file");

  const auto count = get_le<std::uint64_t>(in);
  const auto pad_to = get_le<std::uint64_t>(in);
  if (pad_to > (1u << 24))
    throw LengthMismatch("implausible pad_to " + std::to_string(pad_to));

  std::vector<FeatureRecord> records;
  for (std::uint64_t i = 0; i < count; ++i) {
    FeatureRecord r;
    const auto id_len = get_le<std::uint32_t>(in);
    r.id.resize(id_len);
    if (id_len > 0 && !in.read(r.id.data(), id_len))
      throw LengthMismatch("feature file is truncated");
    r.values.resize(pad_to);
    for (auto &v: r.values)
      v = std::bit_cast<double>(get_le<std::uint64_t>(in));
    records.push_back(std::move(r));
  }
  if (in.peek() != std::char_traits<char>::eof())
    throw LengthMismatch("trailing bytes after the last record");
  return records;
}

std::vector<FeatureRecord> read_features(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path.string());
  return read_features(in);
}

std::string features_to_json(std::span<const FeatureRecord> records) {
  using nlohmann::json;
  json out;
  out["format"] = "ECC1";
  out["pad_to"] = records.empty() ? 0 : records.front().values.size();
  json list = json::array();
  for (const FeatureRecord &r: records)
    list.push_back({{"id", r.id}, {"values", r.values}});
  out["records"] = std::move(list);
  return out.dump(1);
}

} // namespace cellfeat::ecc
