#include "edasvm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "edasvm/errors.hpp"
#include "edasvm/rng.hpp"

namespace edasvm {

std::pair<ConfusionMatrix, MetricSet> confusion_metrics(
    std::span<const int> preds, std::span<const int> truths) {
  if (preds.size() != truths.size())
    throw LengthMismatch(std::to_string(preds.size()) + " vs " +
                         std::to_string(truths.size()));
  if (preds.empty()) throw EmptyEvaluation("no predictions");

  ConfusionMatrix cm;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    if (truths[i] == 1)
      (preds[i] == 1 ? cm.tp : cm.fn)++;
    else
      (preds[i] == 1 ? cm.fp : cm.tn)++;
  }

  MetricSet m;
  auto safe_div = [&m](double num, double den) {
    if (den == 0.0) {
      m.degenerate = true;
      return 0.0;
    }
    return num / den;
  };
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());

  double p_pos = safe_div(double(cm.tp), double(cm.tp + cm.fp));
  double r_pos = safe_div(double(cm.tp), double(cm.tp + cm.fn));
  double p_neg = safe_div(double(cm.tn), double(cm.tn + cm.fn));
  double r_neg = safe_div(double(cm.tn), double(cm.tn + cm.fp));
  double f_pos = safe_div(2.0 * p_pos * r_pos, p_pos + r_pos);
  double f_neg = safe_div(2.0 * p_neg * r_neg, p_neg + r_neg);

  m.precision = 0.5 * (p_pos + p_neg);
  m.recall = 0.5 * (r_pos + r_neg);
  m.f1 = 0.5 * (f_pos + f_neg);
  return {cm, m};
}

std::vector<std::vector<std::uint32_t>> kfold_split(std::size_t n,
                                                    const CvConfig& cfg) {
  if (cfg.k < 2 || static_cast<std::size_t>(cfg.k) > n)
    throw TooFewSamples("k=" + std::to_string(cfg.k) + " with n=" +
                        std::to_string(n));
  std::vector<std::uint32_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::uint32_t>(i);
  Rng rng(mix_seed(cfg.seed, 0x6b666f6cull));  // distinct stream per purpose
  rng.shuffle(idx);

  std::vector<std::vector<std::uint32_t>> folds(cfg.k);
  std::size_t base = n / static_cast<std::size_t>(cfg.k);
  std::size_t extra = n % static_cast<std::size_t>(cfg.k);
  std::size_t at = 0;
  for (int f = 0; f < cfg.k; ++f) {
    std::size_t len = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
    folds[f].assign(idx.begin() + at, idx.begin() + at + len);
    at += len;
  }
  return folds;
}

std::vector<std::vector<std::uint32_t>> kfold_split_grouped(
    const std::vector<std::int64_t>& group_ids, const CvConfig& cfg) {
  if (cfg.k < 2) throw TooFewSamples("k must be >= 2");
  std::map<std::int64_t, std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < group_ids.size(); ++i)
    groups[group_ids[i]].push_back(static_cast<std::uint32_t>(i));
  if (groups.size() < static_cast<std::size_t>(cfg.k))
    throw TooFewSamples("fewer groups than folds");

  std::vector<std::int64_t> order;
  order.reserve(groups.size());
  for (const auto& [gid, members] : groups) order.push_back(gid);
  Rng rng(mix_seed(cfg.seed, 0x67726f7570ull));
  rng.shuffle(order);

  std::vector<std::vector<std::uint32_t>> folds(cfg.k);
  for (std::int64_t gid : order) {
    // smallest fold first; ties deterministically by index
    std::size_t target = 0;
    for (std::size_t f = 1; f < folds.size(); ++f)
      if (folds[f].size() < folds[target].size()) target = f;
    const auto& members = groups[gid];
    folds[target].insert(folds[target].end(), members.begin(), members.end());
  }
  return folds;
}

CvResult cross_validate(const TokenDocs& data, const SvmHyperParams& hyper,
                        const CvConfig& cfg) {
  std::vector<std::vector<std::uint32_t>> folds;
  if (cfg.group_by_source) {
    std::vector<std::int64_t> gids(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) gids[i] = data[i].source_id;
    folds = kfold_split_grouped(gids, cfg);
  } else {
    folds = kfold_split(data.size(), cfg);
  }

  CvResult result;
  result.per_fold.resize(folds.size());

  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<char> held(data.size(), 0);
    for (auto i : folds[f]) held[i] = 1;

    TokenDocs train_docs, held_docs;
    for (std::size_t i = 0; i < data.size(); ++i)
      (held[i] ? held_docs : train_docs).push_back(data[i]);

    bool has_pos = false, has_neg = false;
    for (const auto& d : train_docs)
      (d.label == Label::Positive ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg)
      throw FoldDegenerate("fold " + std::to_string(f) +
                           " training portion is single-class");

    TfIdfModel tfidf = TfIdfModel::fit(train_docs);
    TrainingSet ts;
    ts.x = tfidf.transform_batch(train_docs);
    ts.y.reserve(train_docs.size());
    for (const auto& d : train_docs) ts.y.push_back(label_value(d.label));

    SvmHyperParams fold_hyper = hyper;
    fold_hyper.seed = mix_seed(hyper.seed, 0xf01dull, f);
    SvmModel model = train_smo(ts, fold_hyper);

    std::vector<SparseVector> held_x = tfidf.transform_batch(held_docs);
    std::vector<int> preds = predict_batch(model, held_x);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < held_docs.size(); ++i)
      if (preds[i] == label_value(held_docs[i].label)) ++correct;
    result.per_fold[f] =
        held_docs.empty() ? 0.0
                          : static_cast<double>(correct) /
                                static_cast<double>(held_docs.size());
  }

  double sum = 0.0;
  for (double s : result.per_fold) sum += s;
  result.mean = sum / static_cast<double>(result.per_fold.size());
  return result;
}

GridSearchResult grid_search(const TokenDocs& data, const HyperGrid& grid,
                             const CvConfig& cfg, const SvmHyperParams& base) {
  if (grid.reg_c.empty() || grid.gamma.empty() || grid.degree.empty() ||
      grid.coef0.empty())
    throw ConfigError("grid axes must be nonempty");

  GridSearchResult result;
  bool first = true;
  for (double c : grid.reg_c)
    for (double g : grid.gamma)
      for (int d : grid.degree)
        for (double c0 : grid.coef0) {
          SvmHyperParams hyper = base;
          hyper.reg_c = c;
          hyper.gamma = g;
          hyper.degree = d;
          hyper.coef0 = c0;
          CvResult cv = cross_validate(data, hyper, cfg);
          result.table.push_back({hyper, cv.mean, cv.per_fold});
          // strict improvement only: ties keep the earlier (smaller C,
          // gamma, degree by loop order) combination
          if (first || cv.mean > result.best_score) {
            result.best = hyper;
            result.best_score = cv.mean;
            first = false;
          }
        }
  return result;
}

}  // namespace edasvm
