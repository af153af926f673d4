//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cellfeat::statlab {

/// Shuffles 0..n-1 with Fisher-Yates (for i = n-1 down to 1, swap i with
/// SplitMix64(seed).below(i + 1)) and cuts the result into k contiguous
/// folds; the first n % k folds get one extra index. Throws BadK unless
/// 2 <= k <= n.
std::vector<std::vector<int>> kfold_split(int n, int k, std::uint64_t seed);

// I_x(a, b) by Lentz's continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// P(T_nu >= t).
double t_survival(double t, int nu);

// q with P(T_nu <= q) = prob, prob in (0, 1).
double t_quantile(double prob, int nu);

struct NBComparison {
  std::string competitor;
  double delta = 0.0;     // mean of competitor - control
  double variance = 0.0;  // sample variance of the differences
  double se_nb = 0.0;
  double t_nb = 0.0;
  int dof = 0;
  double p = 0.0;         // one-sided, upper tail
  double p_holm = 0.0;    // filled by compare_to_control
  double ci_low = 0.0;
  double ci_high = 0.0;
  bool degenerate = false;
};

/// Nadeau-Bengio corrected one-sided paired test on fold differences d.
///   se = sqrt((1/K + 1/(K-1)) s^2),  t = mean / se,  p = P(T_{K-1} >= t)
///   CI = mean +- t_{1-alpha/2, K-1} se
/// Differences whose spread is floating-point noise (sd <= 64 eps max|d|)
/// are degenerate: t = +-inf (0 when mean = 0), p in {0, 1, 0.5}, CI
/// collapses to the mean. Throws BadLength when K < 2.
NBComparison nb_test(std::span<const double> differences, double alpha = 0.05);

struct HolmResult {
  std::vector<double> adjusted;
  std::vector<bool> reject;
};

/// Holm step-down in input order. Throws BadP for p outside [0, 1].
HolmResult holm_adjust(std::span<const double> pvals, double alpha = 0.05);

enum class LossKind { kMae, kRmse };

/// Per-model fold losses. Every model must report the same fold indices;
/// differences are paired by fold index.
class FoldLossTable {
public:
  // Throws SchemaError on a repeated (model, fold).
  void add(const std::string &model, int fold, double mae, double rmse);

  /// Header `model,fold,mae,rmse`, then one row per (model, fold). Throws
  /// SchemaError with `line N` in the path.
  static FoldLossTable parse_csv(std::string_view text);
  static FoldLossTable load_csv(const std::filesystem::path &path);

  // In order of first appearance.
  const std::vector<std::string> &models() const noexcept { return models_; }
  bool has_model(std::string_view model) const;

  // Ordered by fold index.
  std::vector<double> losses(const std::string &model, LossKind kind) const;

  // Throws LengthMismatch when models disagree on their folds.
  int folds() const;

private:
  std::vector<std::string> models_;
  std::map<std::string, std::map<int, std::pair<double, double>>, std::less<>> rows_;
};

struct ComparisonReport {
  std::string control;
  std::vector<NBComparison> mae;
  std::vector<NBComparison> rmse;
};

/// NB test of every competitor against the control for both loss families,
/// with Holm applied separately per family. Rows are sorted by Holm p, ties
/// by competitor name. Throws UnknownControl, LengthMismatch, or Error when
/// there is no competitor.
ComparisonReport compare_to_control(const FoldLossTable &table, const std::string &control,
                                    double alpha = 0.05);

/// Header `comparison,delta,t_nb,ci_low,ci_high,p,p_holm`; comparison is
/// "<control> vs <competitor>", numbers use %.10g.
void write_comparison_csv(std::ostream &out, const std::string &control,
                          std::span<const NBComparison> rows);

struct Metrics {
  double mae = 0.0;
  double rmse = 0.0;
};

// Throws LengthMismatch on unequal or empty inputs.
Metrics metrics(std::span<const double> y_true, std::span<const double> y_pred);

enum class Metric { kMae, kRmse };

struct BootstrapCI {
  double point = 0.0;
  double low = 0.0;
  double high = 0.0;
  double half_width = 0.0;
  int replicates = 0;
  std::uint64_t seed = 0;
};

/// Percentile bootstrap. Replicate r resamples n index pairs with
/// SplitMix64(substream_seed(seed, r)), so the parallel and serial versions
/// agree bit for bit. Percentiles interpolate linearly between order
/// statistics. Throws LengthMismatch, or Error for n < 2 or B < 100.
BootstrapCI bootstrap_ci(std::span<const double> y_true, std::span<const double> y_pred,
                         Metric metric, int replicates = 10000, std::uint64_t seed = 42,
                         double level = 0.95);

BootstrapCI bootstrap_ci_serial(std::span<const double> y_true,
                                std::span<const double> y_pred, Metric metric,
                                int replicates = 10000, std::uint64_t seed = 42,
                                double level = 0.95);

} // namespace cellfeat::statlab
