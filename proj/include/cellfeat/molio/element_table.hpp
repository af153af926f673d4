//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace cellfeat::molio {

struct ElementInfo {
  std::string symbol;
  int atomic_number = 0;
  // Mass number of the most abundant isotope.
  int mass_number = 0;
};

struct AtomComposition {
  int protons = 0;
  int neutrons = 0;
  int electrons = 0;

  bool operator==(const AtomComposition &) const = default;
};

/// Symbol -> (Z, most abundant A). Text format is one element per line,
/// whitespace separated `symbol Z A`; blank lines and `#` comments ignored.
class ElementTable {
public:
  ElementTable() = default;

  // The table shipped in data/elements.tsv, compiled in.
  static const ElementTable &defaults();

  static ElementTable parse(std::string_view text);
  static ElementTable load(const std::filesystem::path &path);

  // Replaces an existing entry with the same symbol.
  void add(ElementInfo info);
  void merge(const ElementTable &other);

  const ElementInfo *find(std::string_view symbol) const;
  bool contains(std::string_view symbol) const {
    return find(symbol) != nullptr;
  }
  std::size_t size() const noexcept { return entries_.size(); }

  const std::map<std::string, ElementInfo, std::less<>> &entries() const {
    return entries_;
  }

private:
  std::map<std::string, ElementInfo, std::less<>> entries_;
};

// (Z, A - Z, Z - charge), with A the isotope if given, else the table's most
// abundant mass number. Throws UnknownElement, or Error when the isotope is
// lighter than Z or the charge exceeds Z.
AtomComposition element_composition(
    std::string_view element, int formal_charge,
    std::optional<int> isotope = std::nullopt,
    const ElementTable &table = ElementTable::defaults());

} // namespace cellfeat::molio
