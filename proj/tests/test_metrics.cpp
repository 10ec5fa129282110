#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "edasvm/errors.hpp"
#include "edasvm/metrics.hpp"
#include "edasvm/rng.hpp"

using namespace edasvm;

namespace {

TokenDoc doc(std::int64_t id, Label label, std::vector<std::string> tokens) {
  TokenDoc d;
  d.source_id = id;
  d.label = label;
  d.tokens = std::move(tokens);
  return d;
}

// cleanly separable two-vocabulary corpus
TokenDocs separable_docs(int per_class) {
  TokenDocs docs;
  for (int i = 0; i < per_class; ++i) {
    docs.push_back(doc(i, Label::Positive,
                       {"bagus", i % 2 ? "cantik" : "keren", "foto"}));
    docs.push_back(doc(per_class + i, Label::Negative,
                       {"jelek", i % 2 ? "buruk" : "norak", "muka"}));
  }
  return docs;
}

SvmHyperParams easy_hyper() {
  SvmHyperParams h;
  h.reg_c = 10.0;
  h.gamma = 1.0;
  h.degree = 1;
  h.coef0 = 0.0;
  return h;
}

}  // namespace

TEST_CASE("confusion_metrics hand-checked example") {
  // tp=2 fn=1 fp=1 tn=2
  std::vector<int> truths = {1, 1, 1, -1, -1, -1};
  std::vector<int> preds = {1, 1, -1, 1, -1, -1};
  auto [cm, m] = confusion_metrics(preds, truths);
  CHECK(cm.tp == 2);
  CHECK(cm.fn == 1);
  CHECK(cm.fp == 1);
  CHECK(cm.tn == 2);
  CHECK(m.accuracy == doctest::Approx(4.0 / 6.0));
  CHECK(m.precision == doctest::Approx(2.0 / 3.0));
  CHECK(m.recall == doctest::Approx(2.0 / 3.0));
  CHECK(m.f1 == doctest::Approx(2.0 / 3.0));
  CHECK_FALSE(m.degenerate);
  CHECK(m.accuracy ==
        double(cm.tp + cm.tn) / double(cm.total()));  // exact identity
}

TEST_CASE("perfect predictions give all-ones metrics") {
  std::vector<int> truths = {1, -1, 1, -1};
  auto [cm, m] = confusion_metrics(truths, truths);
  CHECK(m.accuracy == 1.0);
  CHECK(m.precision == 1.0);
  CHECK(m.recall == 1.0);
  CHECK(m.f1 == 1.0);
}

TEST_CASE("degenerate single-class predictions score zero cells") {
  std::vector<int> truths = {1, -1};
  std::vector<int> preds = {1, 1};
  auto [cm, m] = confusion_metrics(preds, truths);
  CHECK(cm.tn == 0);
  CHECK(m.degenerate);  // negative-class precision divided by zero
}

TEST_CASE("confusion_metrics argument validation") {
  std::vector<int> a = {1};
  std::vector<int> b = {1, -1};
  CHECK_THROWS_AS(confusion_metrics(a, b), LengthMismatch);
  std::vector<int> empty;
  CHECK_THROWS_AS(confusion_metrics(empty, empty), EmptyEvaluation);
}

TEST_CASE("balanced set with symmetric errors: macro metrics equal accuracy") {
  // 10 per class, 2 errors in each direction
  std::vector<int> truths, preds;
  for (int i = 0; i < 10; ++i) {
    truths.push_back(1);
    preds.push_back(i < 2 ? -1 : 1);
  }
  for (int i = 0; i < 10; ++i) {
    truths.push_back(-1);
    preds.push_back(i < 2 ? 1 : -1);
  }
  auto [cm, m] = confusion_metrics(preds, truths);
  CHECK(m.accuracy == doctest::Approx(0.8));
  CHECK(m.precision == doctest::Approx(m.accuracy));
  CHECK(m.recall == doctest::Approx(m.accuracy));
  CHECK(m.f1 == doctest::Approx(m.accuracy));
}

TEST_CASE("kfold_split sizes") {
  CvConfig cfg;
  cfg.k = 10;
  auto folds = kfold_split(400, cfg);
  REQUIRE(folds.size() == 10);
  for (const auto& f : folds) CHECK(f.size() == 40);

  cfg.k = 3;
  auto folds2 = kfold_split(10, cfg);
  std::multiset<std::size_t> sizes;
  for (const auto& f : folds2) sizes.insert(f.size());
  CHECK(sizes == std::multiset<std::size_t>{3, 3, 4});
}

TEST_CASE("kfold_split partition property") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + rng.below(200);
    CvConfig cfg;
    cfg.k = 2 + static_cast<int>(rng.below(std::min<std::size_t>(n - 1, 12)));
    cfg.seed = rng.next();
    auto folds = kfold_split(n, cfg);
    std::set<std::uint32_t> seen;
    std::size_t smallest = n, largest = 0;
    for (const auto& f : folds) {
      smallest = std::min(smallest, f.size());
      largest = std::max(largest, f.size());
      for (auto i : f) CHECK(seen.insert(i).second);
    }
    CHECK(seen.size() == n);
    CHECK(largest - smallest <= 1);
  }
}

TEST_CASE("kfold_split rejects k > n") {
  CvConfig cfg;
  cfg.k = 11;
  CHECK_THROWS_AS(kfold_split(10, cfg), TooFewSamples);
}

TEST_CASE("grouped folds keep copies of one source together") {
  // 60 sources x 5 copies
  std::vector<std::int64_t> gids;
  for (int s = 0; s < 60; ++s)
    for (int c = 0; c < 5; ++c) gids.push_back(s);
  CvConfig cfg;
  cfg.k = 10;
  auto folds = kfold_split_grouped(gids, cfg);
  REQUIRE(folds.size() == 10);

  std::set<std::uint32_t> seen;
  std::vector<std::set<std::int64_t>> fold_sources(folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    for (auto i : folds[f]) {
      CHECK(seen.insert(i).second);
      fold_sources[f].insert(gids[i]);
    }
  }
  CHECK(seen.size() == gids.size());
  for (std::size_t a = 0; a < folds.size(); ++a)
    for (std::size_t b = a + 1; b < folds.size(); ++b)
      for (auto src : fold_sources[a]) CHECK(fold_sources[b].count(src) == 0);
}

TEST_CASE("cross_validate on separable data scores 1.0") {
  TokenDocs docs = separable_docs(15);
  CvConfig cfg;
  cfg.k = 5;
  CvResult r = cross_validate(docs, easy_hyper(), cfg);
  CHECK(r.per_fold.size() == 5);
  CHECK(r.mean == doctest::Approx(1.0));
  double sum = std::accumulate(r.per_fold.begin(), r.per_fold.end(), 0.0);
  CHECK(r.mean == doctest::Approx(sum / 5.0));
}

TEST_CASE("cross_validate deterministic per seed") {
  TokenDocs docs = separable_docs(10);
  // flip some labels to create fold-to-fold variation
  docs[0].label = Label::Negative;
  docs[3].label = Label::Negative;
  CvConfig cfg;
  cfg.k = 4;
  cfg.seed = 99;
  CvResult a = cross_validate(docs, easy_hyper(), cfg);
  CvResult b = cross_validate(docs, easy_hyper(), cfg);
  CHECK(a.per_fold == b.per_fold);

  cfg.seed = 100;
  CvResult c = cross_validate(docs, easy_hyper(), cfg);
  CHECK(c.per_fold.size() == a.per_fold.size());  // may or may not differ
}

TEST_CASE("cross_validate rejects single-class training folds") {
  TokenDocs docs;
  docs.push_back(doc(0, Label::Positive, {"bagus"}));
  docs.push_back(doc(1, Label::Positive, {"keren"}));
  docs.push_back(doc(2, Label::Negative, {"jelek"}));
  CvConfig cfg;
  cfg.k = 3;
  CHECK_THROWS_AS(cross_validate(docs, easy_hyper(), cfg), FoldDegenerate);
}

TEST_CASE("grid_search singleton returns the single combination") {
  TokenDocs docs = separable_docs(10);
  HyperGrid grid;
  grid.reg_c = {1.0};
  grid.gamma = {2.0};
  grid.degree = {2};
  grid.coef0 = {1.0};
  CvConfig cfg;
  cfg.k = 4;
  GridSearchResult r = grid_search(docs, grid, cfg, easy_hyper());
  REQUIRE(r.table.size() == 1);
  CHECK(r.best.reg_c == 1.0);
  CHECK(r.best.gamma == 2.0);
  CHECK(r.best.degree == 2);
  CHECK(r.best.coef0 == 1.0);
  CHECK(r.best_score == r.table[0].mean);
}

TEST_CASE("grid_search picks the argmax with deterministic tie-break") {
  TokenDocs docs = separable_docs(10);
  docs[0].label = Label::Negative;  // a little noise
  HyperGrid grid;
  grid.reg_c = {0.01, 1.0};
  grid.gamma = {1.0};
  grid.degree = {1};
  grid.coef0 = {0.0};
  CvConfig cfg;
  cfg.k = 4;
  GridSearchResult r = grid_search(docs, grid, cfg, easy_hyper());
  REQUIRE(r.table.size() == 2);

  // recompute the winner per the documented rule: first row reaching the max
  double best = std::max(r.table[0].mean, r.table[1].mean);
  std::size_t first = r.table[0].mean >= best ? 0 : 1;
  CHECK(r.best_score == best);
  CHECK(r.best.reg_c == r.table[first].hyper.reg_c);
}
