//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>

#include "cellfeat/molio/element_table.hpp"
#include "cellfeat/molio/molecule.hpp"

namespace cellfeat::molio {

/// Parses the supported SMILES subset into a heavy-atom graph.
///
/// Grammar: organic-subset atoms (B C N O P S F Cl Br I, aromatic b c n o p
/// s), bracket atoms `[isotope? symbol Hcount? charge?]`, bonds `- = # :`,
/// branches, ring closures `0-9` and `%nn`. Hydrogen counts inside brackets
/// are accepted and dropped. An unmarked bond between two aromatic atoms is
/// aromatic, otherwise single.
///
/// Throws SyntaxError (with a 0-based character position) or DuplicateBond.
MolecularGraph parse_smiles(std::string_view text,
                            const ElementTable &table = ElementTable::defaults());

/// Parses the JSON graph schema:
///   {"atoms": [{"element": "C", "charge": 0, "isotope": 13, "aromatic": false}],
///    "bonds": [{"a": 0, "b": 1, "order": "single"}]}
/// `charge`, `isotope`, `aromatic` and `order` are optional. Throws
/// SchemaError carrying the path of the offending field.
MolecularGraph parse_graph_file(std::string_view text,
                                const ElementTable &table = ElementTable::defaults());

// Canonical serialization in the graph schema. Keys sorted, no whitespace;
// defaults are written out explicitly.
std::string to_graph_json(const MolecularGraph &graph);

} // namespace cellfeat::molio
