//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/molio/element_table.hpp"

#include <fstream>
#include <sstream>

#include "cellfeat/core/errors.hpp"

namespace cellfeat::molio {
namespace {

// Keep in sync with data/elements.tsv (checked by the unit tests).
constexpr std::string_view kDefaultTable = R"(# symbol	Z	most-abundant A
H	1	1
B	5	11
C	6	12
N	7	14
O	8	16
F	9	19
P	15	31
S	16	32
Cl	17	35
Br	35	79
I	53	127
)";

} // namespace

const ElementTable &ElementTable::defaults() {
  static const ElementTable table = parse(kDefaultTable);
  return table;
}

ElementTable ElementTable::parse(std::string_view text) {
  ElementTable table;
  std::istringstream in {std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    ElementInfo info;
    if (!(fields >> info.symbol))
      continue;
    if (!(fields >> info.atomic_number >> info.mass_number)
        || info.atomic_number < 1 || info.mass_number < info.atomic_number) {
      throw Error("element table line " + std::to_string(lineno)
                  + ": expected `symbol Z A` with 1 <= Z <= A");
    }
    std::string extra;
    if (fields >> extra)
      throw Error("element table line " + std::to_string(lineno)
                  + ": trailing field '" + extra + "'");
    table.add(std::move(info));
  }
  return table;
}

ElementTable ElementTable::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open element table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void ElementTable::add(ElementInfo info) {
  std::string key = info.symbol;
  entries_.insert_or_assign(std::move(key), std::move(info));
}

void ElementTable::merge(const ElementTable &other) {
  for (const auto &[_, info]: other.entries_)
    add(info);
}

const ElementInfo *ElementTable::find(std::string_view symbol) const {
  auto it = entries_.find(symbol);
  return it == entries_.end() ? nullptr : &it->second;
}

AtomComposition element_composition(std::string_view element,
                                    int formal_charge,
                                    std::optional<int> isotope,
                                    const ElementTable &table) {
  const ElementInfo *info = table.find(element);
  if (info == nullptr)
    throw UnknownElement(std::string(element));

  const int z = info->atomic_number;
  const int mass = isotope.value_or(info->mass_number);
  if (mass < z)
    throw Error("isotope " + std::to_string(mass) + " is lighter than Z="
                + std::to_string(z) + " for " + std::string(element));
  if (formal_charge > z)
    throw Error("charge " + std::to_string(formal_charge)
                + " leaves a negative electron count for "
                + std::string(element));
  return {z, mass - z, z - formal_charge};
}

} // namespace cellfeat::molio
