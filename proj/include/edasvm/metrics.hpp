#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edasvm/preprocess.hpp"
#include "edasvm/svm.hpp"

namespace edasvm {

struct ConfusionMatrix {
  std::uint64_t tp = 0, fn = 0, fp = 0, tn = 0;  // positive class = +1
  std::uint64_t total() const { return tp + fn + fp + tn; }
};

struct MetricSet {
  double accuracy = 0.0;
  double precision = 0.0;  // macro over the two classes
  double recall = 0.0;
  double f1 = 0.0;
  bool degenerate = false;  // some cell divided by zero and scored 0
};

std::pair<ConfusionMatrix, MetricSet> confusion_metrics(
    std::span<const int> preds, std::span<const int> truths);

struct CvConfig {
  int k = 10;
  std::uint64_t seed = 42;
  bool group_by_source = false;
};

// Disjoint index folds covering 0..n-1, sizes differing by at most one,
// shuffled by seed.
std::vector<std::vector<std::uint32_t>> kfold_split(std::size_t n,
                                                    const CvConfig& cfg);

// All samples sharing a group id land in the same fold. Fold sizes are
// balanced greedily over shuffled groups.
std::vector<std::vector<std::uint32_t>> kfold_split_grouped(
    const std::vector<std::int64_t>& group_ids, const CvConfig& cfg);

struct CvResult {
  double mean = 0.0;
  std::vector<double> per_fold;
};

// Per fold: fit TF-IDF on the k-1 training folds, train the SVM, score
// accuracy on the held fold. Deterministic per seed.
CvResult cross_validate(const TokenDocs& data, const SvmHyperParams& hyper,
                        const CvConfig& cfg);

struct HyperGrid {
  std::vector<double> reg_c{1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0};
  std::vector<double> gamma{0.01, 0.1, 1.0, 10.0, 100.0};
  std::vector<int> degree{2, 3};
  std::vector<double> coef0{0.0, 1.0};
};

struct GridSearchResult {
  SvmHyperParams best;
  double best_score = 0.0;
  struct Row {
    SvmHyperParams hyper;
    double mean;
    std::vector<double> per_fold;
  };
  std::vector<Row> table;
};

// Full Cartesian product scored by cross-validated mean accuracy. Ties break
// toward smaller C, then gamma, then degree, then grid order.
GridSearchResult grid_search(const TokenDocs& data, const HyperGrid& grid,
                             const CvConfig& cfg, const SvmHyperParams& base);

}  // namespace edasvm
