//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cctype>
#include <map>
#include <optional>
#include <vector>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/molio/parse.hpp"

namespace cellfeat::molio {
namespace {

bool is_aromatic_symbol(std::string_view sym) {
  return sym == "b" || sym == "c" || sym == "n" || sym == "o" || sym == "p"
         || sym == "s";
}

std::string capitalize(std::string_view sym) {
  std::string out(sym);
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

class SmilesParser {
public:
  SmilesParser(std::string_view text, const ElementTable &table)
      : text_(text), table_(table) { }

  MolecularGraph parse() {
    if (text_.empty())
      throw SyntaxError(0, "empty SMILES");

    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '[' || std::isalpha(static_cast<unsigned char>(c))) {
        attach(c == '[' ? bracket_atom() : organic_atom());
      } else if (c == '(') {
        open_branch();
      } else if (c == ')') {
        close_branch();
      } else if (c == '-' || c == '=' || c == '#' || c == ':') {
        bond_symbol();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '%') {
        ring_closure();
      } else if (c == '.') {
        throw SyntaxError(pos_, "disconnected components ('.') are not supported");
      } else if (c == '/' || c == '\\' || c == '@') {
        throw SyntaxError(pos_, "stereochemistry is not supported");
      } else if (c == '*') {
        throw SyntaxError(pos_, "wildcard atoms are not supported");
      } else {
        throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
      }
    }

    if (pending_)
      throw SyntaxError(pending_pos_, "bond symbol without a following atom");
    if (!branches_.empty())
      throw SyntaxError(branches_.back().position, "unbalanced '('");
    if (!rings_.empty()) {
      const auto &[label, open] = *rings_.begin();
      throw SyntaxError(open.position,
                        "unmatched ring closure " + std::to_string(label));
    }
    if (graph_.empty())
      throw SyntaxError(0, "no atoms");
    return std::move(graph_);
  }

private:
  struct RingOpen {
    int atom;
    std::optional<BondOrder> order;
    std::size_t position;
  };

  struct BranchOpen {
    int atom;
    std::size_t position;
  };

  BondOrder default_order(int a, int b) const {
    return graph_.atom(a).aromatic && graph_.atom(b).aromatic
               ? BondOrder::kAromatic
               : BondOrder::kSingle;
  }

  void attach(int atom) {
    if (prev_ >= 0) {
      graph_.add_bond(prev_, atom, pending_.value_or(default_order(prev_, atom)));
    } else if (pending_) {
      throw SyntaxError(pending_pos_, "bond symbol without a preceding atom");
    }
    pending_.reset();
    prev_ = atom;
  }

  int add_atom(std::string element, bool aromatic, int charge,
               std::optional<int> isotope) {
    Atom atom;
    atom.element = std::move(element);
    atom.aromatic = aromatic;
    atom.formal_charge = charge;
    atom.isotope = isotope;
    return graph_.add_atom(std::move(atom));
  }

  int organic_atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    std::string_view sym = text_.substr(pos_, 1);
    if (c == 'C' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'l')
      sym = text_.substr(pos_, 2);
    else if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == 'r')
      sym = text_.substr(pos_, 2);

    static constexpr std::string_view kOrganic[] = {
        "B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"};
    bool organic = false;
    for (auto o: kOrganic)
      organic = organic || o == sym;

    if (organic) {
      pos_ += sym.size();
      if (!table_.contains(sym))
        throw SyntaxError(start, "unknown element '" + std::string(sym) + "'");
      return add_atom(std::string(sym), false, 0, std::nullopt);
    }
    if (is_aromatic_symbol(sym)) {
      pos_ += 1;
      std::string element = capitalize(sym);
      if (!table_.contains(element))
        throw SyntaxError(start, "unknown element '" + element + "'");
      return add_atom(std::move(element), true, 0, std::nullopt);
    }
    throw SyntaxError(start, "unknown element '" + std::string(sym) + "'");
  }

  int bracket_atom() {
    const std::size_t open = pos_;
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos)
      throw SyntaxError(open, "malformed bracket atom: missing ']'");
    ++pos_;

    auto malformed = [&](const std::string &what) {
      return SyntaxError(pos_, "malformed bracket atom: " + what);
    };
    auto read_int = [&]() -> std::optional<int> {
      std::size_t begin = pos_;
      while (pos_ < close && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (begin == pos_)
        return std::nullopt;
      if (pos_ - begin > 4)
        throw malformed("number too long");
      return std::stoi(std::string(text_.substr(begin, pos_ - begin)));
    };

    std::optional<int> isotope = read_int();

    if (pos_ >= close || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw malformed("missing element symbol");

    std::string element;
    bool aromatic = false;
    const std::size_t sym_pos = pos_;
    if (std::islower(static_cast<unsigned char>(text_[pos_]))) {
      std::string_view sym = text_.substr(pos_, 1);
      if (!is_aromatic_symbol(sym))
        throw SyntaxError(sym_pos, "unknown element '" + std::string(sym) + "'");
      element = capitalize(sym);
      aromatic = true;
      ++pos_;
    } else {
      // Prefer a two-letter symbol when the table knows it ([Cl], [Br]).
      if (pos_ + 1 < close && std::islower(static_cast<unsigned char>(text_[pos_ + 1]))
          && table_.contains(text_.substr(pos_, 2))) {
        element = std::string(text_.substr(pos_, 2));
        pos_ += 2;
      } else {
        element = std::string(text_.substr(pos_, 1));
        ++pos_;
      }
    }
    const ElementInfo *info = table_.find(element);
    if (info == nullptr)
      throw SyntaxError(sym_pos, "unknown element '" + element + "'");

    if (pos_ < close && text_[pos_] == '@')
      throw SyntaxError(pos_, "stereochemistry is not supported");

    // Hydrogen count: accepted, not materialized.
    if (pos_ < close && text_[pos_] == 'H') {
      ++pos_;
      read_int();
    }

    int charge = 0;
    if (pos_ < close && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const char sign = text_[pos_];
      const int unit = sign == '+' ? 1 : -1;
      ++pos_;
      if (auto magnitude = read_int()) {
        charge = unit * *magnitude;
      } else {
        charge = unit;
        while (pos_ < close && text_[pos_] == sign) {
          charge += unit;
          ++pos_;
        }
      }
    }

    if (pos_ != close)
      throw malformed(std::string("unexpected '") + text_[pos_] + "'");
    if (isotope && *isotope < info->atomic_number)
      throw SyntaxError(open, "malformed bracket atom: isotope "
                                  + std::to_string(*isotope)
                                  + " is lighter than the proton count");
    if (charge > info->atomic_number || charge < -8)
      throw SyntaxError(open, "malformed bracket atom: implausible charge");

    pos_ = close + 1;
    return add_atom(std::move(element), aromatic, charge, isotope);
  }

  void open_branch() {
    if (prev_ < 0)
      throw SyntaxError(pos_, "branch without a preceding atom");
    if (pending_)
      throw SyntaxError(pending_pos_, "bond symbol before '('");
    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == ')')
      throw SyntaxError(pos_, "empty branch");
    branches_.push_back({prev_, pos_});
    ++pos_;
  }

  void close_branch() {
    if (branches_.empty())
      throw SyntaxError(pos_, "unbalanced ')'");
    if (pending_)
      throw SyntaxError(pending_pos_, "bond symbol without a following atom");
    prev_ = branches_.back().atom;
    branches_.pop_back();
    ++pos_;
  }

  void bond_symbol() {
    if (pending_)
      throw SyntaxError(pos_, "two consecutive bond symbols");
    if (prev_ < 0)
      throw SyntaxError(pos_, "bond symbol without a preceding atom");
    switch (text_[pos_]) {
    case '-':
      pending_ = BondOrder::kSingle;
      break;
    case '=':
      pending_ = BondOrder::kDouble;
      break;
    case '#':
      pending_ = BondOrder::kTriple;
      break;
    default:
      pending_ = BondOrder::kAromatic;
      break;
    }
    pending_pos_ = pos_;
    ++pos_;
  }

  void ring_closure() {
    const std::size_t start = pos_;
    if (prev_ < 0)
      throw SyntaxError(start, "ring closure without a preceding atom");

    int label;
    if (text_[pos_] == '%') {
      if (pos_ + 2 >= text_.size()
          || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))
          || !std::isdigit(static_cast<unsigned char>(text_[pos_ + 2])))
        throw SyntaxError(start, "'%' must be followed by two digits");
      label = (text_[pos_ + 1] - '0') * 10 + (text_[pos_ + 2] - '0');
      pos_ += 3;
    } else {
      label = text_[pos_] - '0';
      ++pos_;
    }

    auto it = rings_.find(label);
    if (it == rings_.end()) {
      rings_.emplace(label, RingOpen {prev_, pending_, start});
      pending_.reset();
      return;
    }

    const RingOpen open = it->second;
    rings_.erase(it);
    if (open.atom == prev_)
      throw SyntaxError(start, "ring closure " + std::to_string(label)
                                   + " bonds an atom to itself");
    if (open.order && pending_ && *open.order != *pending_)
      throw SyntaxError(start, "conflicting bond orders on ring closure "
                                   + std::to_string(label));
    BondOrder order = open.order ? *open.order
                                 : pending_.value_or(default_order(open.atom, prev_));
    pending_.reset();
    graph_.add_bond(open.atom, prev_, order);
  }

  std::string_view text_;
  const ElementTable &table_;
  std::size_t pos_ = 0;

  MolecularGraph graph_;
  int prev_ = -1;
  std::optional<BondOrder> pending_;
  std::size_t pending_pos_ = 0;
  std::vector<BranchOpen> branches_;
  std::map<int, RingOpen> rings_;
};

} // namespace

MolecularGraph parse_smiles(std::string_view text, const ElementTable &table) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c >= 0x80 || std::isspace(c) || !std::isprint(c))
      throw SyntaxError(i, "non-printable or non-ASCII character");
  }
  return SmilesParser(text, table).parse();
}

} // namespace cellfeat::molio
