//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <json.hpp>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/molio/parse.hpp"

namespace cellfeat::molio {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json &record, const std::string &path,
                         std::initializer_list<std::string_view> allowed) {
  for (const auto &[key, _]: record.items()) {
    bool known = false;
    for (auto a: allowed)
      known = known || key == a;
    if (!known)
      throw SchemaError(path + "." + key, "unknown field");
  }
}

int require_int(const json &record, const std::string &path, const char *key) {
  auto it = record.find(key);
  if (it == record.end())
    throw SchemaError(path + "." + key, "missing required field");
  if (!it->is_number_integer())
    throw SchemaError(path + "." + key, "expected an integer");
  return it->get<int>();
}

} // namespace

MolecularGraph parse_graph_file(std::string_view text,
                                const ElementTable &table) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw SchemaError("$", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw SchemaError("$", "top level must be an object");
  reject_unknown_keys(doc, "$", {"atoms", "bonds"});

  auto atoms = doc.find("atoms");
  if (atoms == doc.end() || !atoms->is_array())
    throw SchemaError("atoms", "expected a list");
  auto bonds = doc.find("bonds");
  if (bonds != doc.end() && !bonds->is_array())
    throw SchemaError("bonds", "expected a list");

  MolecularGraph graph;
  for (std::size_t i = 0; i < atoms->size(); ++i) {
    const json &rec = (*atoms)[i];
    const std::string path = "atoms[" + std::to_string(i) + "]";
    if (!rec.is_object())
      throw SchemaError(path, "expected an object");
    reject_unknown_keys(rec, path, {"element", "charge", "isotope", "aromatic"});

    Atom atom;
    auto element = rec.find("element");
    if (element == rec.end() || !element->is_string())
      throw SchemaError(path + ".element", "expected a string");
    atom.element = element->get<std::string>();
    const ElementInfo *info = table.find(atom.element);
    if (info == nullptr)
      throw SchemaError(path + ".element",
                        "unknown element '" + atom.element + "'");

    if (rec.contains("charge"))
      atom.formal_charge = require_int(rec, path, "charge");
    if (rec.contains("isotope")) {
      atom.isotope = require_int(rec, path, "isotope");
      if (*atom.isotope < info->atomic_number)
        throw SchemaError(path + ".isotope", "lighter than the proton count");
    }
    if (atom.formal_charge > info->atomic_number)
      throw SchemaError(path + ".charge", "exceeds the proton count");
    if (auto arom = rec.find("aromatic"); arom != rec.end()) {
      if (!arom->is_boolean())
        throw SchemaError(path + ".aromatic", "expected a boolean");
      atom.aromatic = arom->get<bool>();
    }
    graph.add_atom(std::move(atom));
  }

  if (bonds == doc.end())
    return graph;

  for (std::size_t i = 0; i < bonds->size(); ++i) {
    const json &rec = (*bonds)[i];
    const std::string path = "bonds[" + std::to_string(i) + "]";
    if (!rec.is_object())
      throw SchemaError(path, "expected an object");
    reject_unknown_keys(rec, path, {"a", "b", "order"});

    const int a = require_int(rec, path, "a");
    const int b = require_int(rec, path, "b");
    if (a < 0 || a >= graph.num_atoms())
      throw SchemaError(path + ".a", "atom index out of range");
    if (b < 0 || b >= graph.num_atoms())
      throw SchemaError(path + ".b", "atom index out of range");
    if (a == b)
      throw SchemaError(path, "self-loop");
    if (graph.find_bond(a, b))
      throw SchemaError(path, "duplicate bond");

    BondOrder order = BondOrder::kSingle;
    if (auto o = rec.find("order"); o != rec.end()) {
      if (!o->is_string())
        throw SchemaError(path + ".order", "expected a string");
      auto parsed = bond_order_from_string(o->get<std::string>());
      if (!parsed)
        throw SchemaError(path + ".order",
                          "expected single|double|triple|aromatic");
      order = *parsed;
    }
    graph.add_bond(a, b, order);
  }
  return graph;
}

std::string to_graph_json(const MolecularGraph &graph) {
  json atoms = json::array();
  for (const Atom &atom: graph.atoms()) {
    json rec = {{"element", atom.element},
                {"charge", atom.formal_charge},
                {"aromatic", atom.aromatic}};
    if (atom.isotope)
      rec["isotope"] = *atom.isotope;
    atoms.push_back(std::move(rec));
  }
  json bonds = json::array();
  for (const Bond &bond: graph.bonds())
    bonds.push_back(
        {{"a", bond.a}, {"b", bond.b}, {"order", std::string(to_string(bond.order))}});
  return json {{"atoms", std::move(atoms)}, {"bonds", std::move(bonds)}}.dump();
}

} // namespace cellfeat::molio
