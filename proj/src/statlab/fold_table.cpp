//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/statlab/statlab.hpp"

namespace cellfeat::statlab {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      return out;
    start = comma + 1;
  }
}

double parse_double(const std::string &field, const std::string &where) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception &) {
    throw SchemaError(where, "expected a number, got '" + field + "'");
  }
  if (used != field.size() || !std::isfinite(v))
    throw SchemaError(where, "expected a finite number, got '" + field + "'");
  return v;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

} // namespace

void FoldLossTable::add(const std::string &model, int fold, double mae, double rmse) {
  auto [it, fresh] = rows_.try_emplace(model);
  if (fresh)
    models_.push_back(model);
  if (!it->second.emplace(fold, std::pair(mae, rmse)).second)
    throw SchemaError(model, "fold " + std::to_string(fold) + " listed twice");
}

FoldLossTable FoldLossTable::parse_csv(std::string_view text) {
  FoldLossTable table;
  std::istringstream in {std::string(text)};
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty())
      continue;
    const auto fields = split_fields(line);
    const std::string where = "line " + std::to_string(lineno);
    if (!header) {
      if (fields != std::vector<std::string> {"model", "fold", "mae", "rmse"})
        throw SchemaError(where, "expected header model,fold,mae,rmse");
      header = true;
      continue;
    }
    if (fields.size() != 4)
      throw SchemaError(where, "expected 4 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty())
      throw SchemaError(where + ".model", "empty model name");
    int fold;
    try {
      std::size_t used = 0;
      fold = std::stoi(fields[1], &used);
      if (used != fields[1].size())
        throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
      throw SchemaError(where + ".fold", "expected an integer, got '" + fields[1] + "'");
    }
    const double mae = parse_double(fields[2], where + ".mae");
    const double rmse = parse_double(fields[3], where + ".rmse");
    try {
      table.add(fields[0], fold, mae, rmse);
    } catch (const SchemaError &) {
      throw SchemaError(where, "duplicate (model, fold) row");
    }
  }
  if (!header)
    throw SchemaError("line 1", "missing header model,fold,mae,rmse");
  return table;
}

FoldLossTable FoldLossTable::load_csv(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str());
}

bool FoldLossTable::has_model(std::string_view model) const {
  return rows_.find(model) != rows_.end();
}

std::vector<double> FoldLossTable::losses(const std::string &model, LossKind kind) const {
  auto it = rows_.find(model);
  if (it == rows_.end())
    throw UnknownControl("unknown model '" + model + "'");
  std::vector<double> out;
  for (const auto &[fold, pair]: it->second)
    out.push_back(kind == LossKind::kMae ? pair.first : pair.second);
  return out;
}

int FoldLossTable::folds() const {
  if (models_.empty())
    return 0;
  const auto &reference = rows_.at(models_.front());
  for (const auto &model: models_) {
    const auto &rows = rows_.at(model);
    bool same = rows.size() == reference.size();
    for (auto a = rows.begin(), b = reference.begin(); same && a != rows.end(); ++a, ++b)
      same = a->first == b->first;
    if (!same)
      throw LengthMismatch("model '" + model + "' does not report the same folds as '"
                           + models_.front() + "'");
  }
  return static_cast<int>(reference.size());
}

ComparisonReport compare_to_control(const FoldLossTable &table, const std::string &control,
                                    double alpha) {
  if (!table.has_model(control))
    throw UnknownControl("control model '" + control + "' not in the table");
  table.folds();
  if (table.models().size() < 2)
    throw Error("no competitor to compare against the control");

  ComparisonReport report;
  report.control = control;
  for (LossKind kind: {LossKind::kMae, LossKind::kRmse}) {
    const auto base = table.losses(control, kind);
    std::vector<NBComparison> family;
    for (const auto &model: table.models()) {
      if (model == control)
        continue;
      const auto other = table.losses(model, kind);
      std::vector<double> d(base.size());
      for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = other[i] - base[i];
      NBComparison c = nb_test(d, alpha);
      c.competitor = model;
      family.push_back(std::move(c));
    }

    std::vector<double> p;
    for (const auto &c: family)
      p.push_back(c.p);
    const auto holm = holm_adjust(p, alpha);
    for (std::size_t i = 0; i < family.size(); ++i)
      family[i].p_holm = holm.adjusted[i];
    std::stable_sort(family.begin(), family.end(), [](const auto &x, const auto &y) {
      return x.p_holm != y.p_holm ? x.p_holm < y.p_holm : x.competitor < y.competitor;
    });
    (kind == LossKind::kMae ? report.mae : report.rmse) = std::move(family);
  }
  return report;
}

void write_comparison_csv(std::ostream &out, const std::string &control,
                          std::span<const NBComparison> rows) {
  out << "comparison,delta,t_nb,ci_low,ci_high,p,p_holm\n";
  for (const auto &c: rows) {
    out << control << " vs " << c.competitor << ',' << format_number(c.delta) << ','
        << format_number(c.t_nb) << ',' << format_number(c.ci_low) << ','
        << format_number(c.ci_high) << ',' << format_number(c.p) << ','
        << format_number(c.p_holm) << '\n';
  }
}

} // namespace cellfeat::statlab
