#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "edasvm/errors.hpp"
#include "edasvm/rng.hpp"
#include "edasvm/tfidf.hpp"

using namespace edasvm;

namespace {

TokenDoc doc(std::int64_t id, std::vector<std::string> tokens) {
  TokenDoc d;
  d.source_id = id;
  d.label = Label::Positive;
  d.tokens = std::move(tokens);
  return d;
}

// the published sample weighting table: term, tf, w_tf, df, idf, tf-idf
struct SampleRow {
  const char* term;
  int tf;
  double w_tf;
  int df;
  double idf;
  double tfidf;
};

constexpr SampleRow kSampleTable[] = {
    {"jujur", 1, 1.0, 6, 1.78, 1.78},     {"aja", 1, 1.0, 58, 0.79, 0.79},
    {"ya", 1, 1.0, 66, 0.74, 0.74},       {"ni", 1, 1.0, 13, 1.44, 1.44},
    {"org", 1, 1.0, 35, 1.01, 1.01},      {"bagus", 1, 1.0, 17, 1.33, 1.33},
    {"kaga", 1, 1.0, 3, 2.08, 2.08},      {"oplas", 2, 1.301, 5, 1.86, 2.42},
    {"tu", 1, 1.0, 10, 1.56, 1.56},       {"foto", 1, 1.0, 5, 1.86, 1.86},
    {"dia", 1, 1.0, 3, 2.08, 2.08},       {"sblm", 1, 1.0, 2, 2.26, 2.26},
    {"dn", 1, 1.0, 2, 2.26, 2.26},        {"dioplas", 1, 1.0, 3, 2.08, 2.08},
    {"muka", 1, 1.0, 18, 1.30, 1.30},     {"aneh", 1, 1.0, 3, 2.08, 2.08},
    {"kyknya", 1, 1.0, 3, 2.08, 2.08},    {"gagal", 1, 1.0, 4, 1.95, 1.95},
    {"oplasnya", 1, 1.0, 3, 2.08, 2.08},
};

constexpr int kTrainDocs = 360;

}  // namespace

TEST_CASE("weight_tf") {
  CHECK(weight_tf(1) == doctest::Approx(1.0));
  CHECK(weight_tf(2) == doctest::Approx(1.301).epsilon(1e-3));
  CHECK(weight_tf(0) == 0.0);
  CHECK(weight_tf(10) == doctest::Approx(2.0));
}

TEST_CASE("idf matches the published sample values") {
  CHECK(idf(kTrainDocs, 58) == doctest::Approx(0.79).epsilon(0.013));
  CHECK(idf(kTrainDocs, 6) == doctest::Approx(1.78).epsilon(0.006));
  CHECK(idf(10, 10) == 0.0);  // df = N
}

TEST_CASE("idf domain errors") {
  CHECK_THROWS_AS(idf(10, 0), DomainError);
  CHECK_THROWS_AS(idf(10, 11), DomainError);
}

TEST_CASE("all 19 sample-table rows reproduce within 0.01") {
  for (const auto& row : kSampleTable) {
    CAPTURE(row.term);
    double w = weight_tf(static_cast<std::uint64_t>(row.tf));
    double i = idf(kTrainDocs, static_cast<std::uint64_t>(row.df));
    CHECK(std::fabs(w - row.w_tf) <= 0.01);
    CHECK(std::fabs(i - row.idf) <= 0.01);
    CHECK(std::fabs(w * i - row.tfidf) <= 0.011);
  }
}

TEST_CASE("fit on two tiny documents") {
  TokenDocs train = {doc(0, {"a", "b"}), doc(1, {"a"})};
  TfIdfModel m = TfIdfModel::fit(train);
  CHECK(m.n_docs() == 2);
  CHECK(m.vocab_size() == 2);
  CHECK(m.df_of("a") == 2);
  CHECK(m.df_of("b") == 1);
  CHECK(m.idf_of("a") == 0.0);
  CHECK(m.idf_of("b") == doctest::Approx(std::log10(2.0)));
}

TEST_CASE("duplicate token increments tf, not df") {
  TokenDocs train = {doc(0, {"a", "a", "b"}), doc(1, {"b"})};
  TfIdfModel m = TfIdfModel::fit(train);
  CHECK(m.df_of("a") == 1);
  SparseVector v = m.transform({"a", "a"});
  REQUIRE(v.entries.size() == 1);
  // w_tf(2) * idf(2,1)
  CHECK(v.entries[0].second ==
        doctest::Approx(weight_tf(2) * std::log10(2.0)));
}

TEST_CASE("fit on empty input throws") {
  CHECK_THROWS_AS(TfIdfModel::fit({}), EmptyInput);
}

TEST_CASE("transform weighting, OOV drop, zero suppression") {
  // build a training set where "oplas" has idf close to the sample table
  TokenDocs train;
  train.push_back(doc(0, {"oplas", "filler"}));
  for (int i = 1; i < 72; ++i) train.push_back(doc(i, {"filler"}));
  TfIdfModel m = TfIdfModel::fit(train);
  // idf(oplas) = log10(72/1) = 1.857; the sample table prints 1.86
  CHECK(m.idf_of("oplas") == doctest::Approx(1.8573).epsilon(1e-3));

  SparseVector v = m.transform({"oplas", "oplas"});
  REQUIRE(v.entries.size() == 1);
  CHECK(v.entries[0].second == doctest::Approx(2.416).epsilon(1e-3));

  CHECK(m.transform({"unseen", "terms"}).entries.empty());
  // df = N term weighs zero and is suppressed
  CHECK(m.transform({"filler"}).entries.empty());
}

TEST_CASE("no OOV on the fitting set; entries sorted") {
  Rng rng(13);
  TokenDocs train;
  const std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 30; ++i) {
    std::vector<std::string> toks;
    std::size_t len = 1 + rng.below(6);
    for (std::size_t k = 0; k < len; ++k) toks.push_back(pool[rng.below(pool.size())]);
    train.push_back(doc(i, toks));
  }
  TfIdfModel m = TfIdfModel::fit(train);
  for (const auto& d : train) {
    SparseVector v = m.transform(d.tokens);
    for (std::size_t k = 1; k < v.entries.size(); ++k)
      CHECK(v.entries[k - 1].first < v.entries[k].first);
    // every token is in vocab: nonzero entries unless idf is 0
    for (const auto& t : d.tokens) CHECK_NOTHROW(m.df_of(t));
  }
}

TEST_CASE("sparse dot") {
  SparseVector a, b;
  a.dim = b.dim = 5;
  a.entries = {{0, 1.0}, {2, 2.0}, {4, 3.0}};
  b.entries = {{1, 5.0}, {2, 0.5}, {4, 2.0}};
  CHECK(a.dot(b) == doctest::Approx(7.0));
  CHECK(b.dot(a) == a.dot(b));
  SparseVector empty;
  empty.dim = 5;
  CHECK(a.dot(empty) == 0.0);
}

TEST_CASE("save/load round trip is bit exact") {
  TokenDocs train = {doc(0, {"foto", "bagus", "banget"}),
                     doc(1, {"muka", "jelek"}), doc(2, {"foto", "muka"})};
  TfIdfModel m = TfIdfModel::fit(train);
  std::ostringstream out;
  m.save(out);
  std::istringstream in(out.str());
  TfIdfModel loaded = TfIdfModel::load(in);

  CHECK(loaded.n_docs() == m.n_docs());
  CHECK(loaded.vocab_hash() == m.vocab_hash());
  for (const auto& d : train) {
    SparseVector v1 = m.transform(d.tokens);
    SparseVector v2 = loaded.transform(d.tokens);
    REQUIRE(v1.entries.size() == v2.entries.size());
    for (std::size_t i = 0; i < v1.entries.size(); ++i) {
      CHECK(v1.entries[i].first == v2.entries[i].first);
      CHECK(v1.entries[i].second == v2.entries[i].second);  // bitwise
    }
  }
}

TEST_CASE("l2 normalization flag") {
  TokenDocs train = {doc(0, {"a", "b"}), doc(1, {"b", "c"}), doc(2, {"c"})};
  TfIdfModel m = TfIdfModel::fit(train);
  m.l2_normalize = true;
  SparseVector v = m.transform({"a", "b", "c"});
  double norm = 0.0;
  for (auto& [i, w] : v.entries) norm += w * w;
  CHECK(norm == doctest::Approx(1.0));
}
