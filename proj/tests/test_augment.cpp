#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "edasvm/augment.hpp"
#include "edasvm/errors.hpp"

using namespace edasvm;

namespace {

// the worked-example sentence: 20 tokens
const std::vector<std::string> kSentence = {
    "jujur", "aja", "ya", "ni", "org", "bagus", "kaga", "oplas", "tu",
    "foto", "dia", "sbml", "dn", "oplas", "dioplas", "muka", "aneh",
    "kyknya", "gagal", "oplasnya"};

std::multiset<std::string> bag(const std::vector<std::string>& v) {
  return {v.begin(), v.end()};
}

std::vector<std::string> random_sentence(Rng& rng, std::size_t max_len) {
  static const std::vector<std::string> pool = {
      "foto", "bagus", "muka", "jelek", "org", "aja", "banget", "kamu",
      "aneh", "gagal", "oplas", "keren", "jujur", "dia"};
  std::size_t len = 1 + rng.below(max_len);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(pool[rng.below(pool.size())]);
  return out;
}

Thesaurus tiny_thesaurus() {
  Thesaurus t;
  t.map = {{"aneh", {"heran"}},
           {"foto", {"cetakan"}},
           {"bagus", {"apik", "elok"}},
           {"jelek", {"buruk"}}};
  return t;
}

bool is_subsequence(const std::vector<std::string>& small,
                    const std::vector<std::string>& big) {
  std::size_t i = 0;
  for (const auto& w : big)
    if (i < small.size() && small[i] == w) ++i;
  return i == small.size();
}

}  // namespace

TEST_CASE("num_edits") {
  CHECK(num_edits(0.1, kSentence.size()) == 2);  // 0.1 * 20
  CHECK(num_edits(0.05, 5) == 1);                // clamp to 1
  CHECK(num_edits(0.5, 10) == 5);
  CHECK(num_edits(0.25, 10) == 3);  // round half up: 2.5 -> 3
  CHECK_THROWS_AS(num_edits(0.1, 0), EmptyInput);
}

TEST_CASE("synonym replacement forces aneh -> heran") {
  Thesaurus t;
  t.map = {{"aneh", {"heran"}}};
  StopwordSet stop;
  Rng rng(1);
  auto out = synonym_replacement(kSentence, 1, t, stop, rng);
  REQUIRE(out.size() == kSentence.size());
  // only one eligible position, only one synonym
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (kSentence[i] == "aneh")
      CHECK(out[i] == "heran");
    else
      CHECK(out[i] == kSentence[i]);
  }
}

TEST_CASE("synonym replacement with no thesaurus hits is identity") {
  Thesaurus t;
  t.map = {{"zzz", {"yyy"}}};
  StopwordSet stop;
  Rng rng(2);
  CHECK(synonym_replacement(kSentence, 3, t, stop, rng) == kSentence);
}

TEST_CASE("synonym replacement preserves length on 1000 random cases") {
  Thesaurus t = tiny_thesaurus();
  StopwordSet stop;
  stop.words = {"aja", "dia"};
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    auto sent = random_sentence(rng, 12);
    int n = 1 + static_cast<int>(rng.below(4));
    auto out = synonym_replacement(sent, n, t, stop, rng);
    CHECK(out.size() == sent.size());
  }
}

TEST_CASE("synonym replacement skips stopword positions") {
  Thesaurus t = tiny_thesaurus();
  StopwordSet stop;
  stop.words = {"foto"};
  Rng rng(4);
  std::vector<std::string> sent = {"foto", "foto"};
  auto out = synonym_replacement(sent, 2, t, stop, rng);
  CHECK(out == sent);
}

TEST_CASE("random insertion inserts a synonym of an in-sentence word") {
  Thesaurus t;
  t.map = {{"foto", {"cetakan"}}};
  StopwordSet stop;
  int grew = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    auto out = random_insertion(kSentence, 1, t, stop, rng);
    REQUIRE(out.size() >= kSentence.size());
    REQUIRE(out.size() <= kSentence.size() + 1);
    if (out.size() == kSentence.size() + 1) {
      ++grew;
      // the inserted word is the synonym; the original order is intact
      auto count = std::count(out.begin(), out.end(), "cetakan");
      CHECK(count == 1);
      CHECK(is_subsequence(kSentence, out));
    } else {
      CHECK(out == kSentence);
    }
  }
  CHECK(grew > 0);  // some seeds must hit "foto" within 10 retries
}

TEST_CASE("random insertion grows by exactly n when every word is eligible") {
  Thesaurus t;
  t.map = {{"foto", {"cetakan"}}, {"bagus", {"apik"}}};
  StopwordSet stop;
  Rng rng(5);
  std::vector<std::string> sent = {"foto", "bagus"};
  auto out = random_insertion(sent, 3, t, stop, rng);
  CHECK(out.size() == sent.size() + 3);
}

TEST_CASE("random insertion with empty thesaurus is identity") {
  Thesaurus t;
  StopwordSet stop;
  Rng rng(6);
  CHECK(random_insertion(kSentence, 4, t, stop, rng) == kSentence);
}

TEST_CASE("random swap exchanges two positions") {
  Rng rng(7);
  std::vector<std::string> pair = {"jujur", "oplas"};
  CHECK(random_swap(pair, 1, rng) == std::vector<std::string>{"oplas", "jujur"});

  std::vector<std::string> single = {"jujur"};
  CHECK(random_swap(single, 5, rng) == single);
}

TEST_CASE("random swap preserves the multiset on 1000 random cases") {
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    auto sent = random_sentence(rng, 15);
    int n = 1 + static_cast<int>(rng.below(5));
    auto out = random_swap(sent, n, rng);
    CHECK(bag(out) == bag(sent));
  }
}

TEST_CASE("random deletion") {
  Rng rng(9);
  CHECK(random_deletion(kSentence, 0.0, rng) == kSentence);  // p=0 identity

  for (int i = 0; i < 50; ++i) {
    auto out = random_deletion(kSentence, 1.0, rng);  // p=1 guard
    REQUIRE(out.size() == 1);
    CHECK(std::find(kSentence.begin(), kSentence.end(), out[0]) !=
          kSentence.end());
  }

  // order of the survivors is intact; length stays in [1, len]
  for (int i = 0; i < 1000; ++i) {
    double p = rng.uniform01();
    auto sent = random_sentence(rng, 15);
    auto out = random_deletion(sent, p, rng);
    CHECK(out.size() >= 1);
    CHECK(out.size() <= sent.size());
    CHECK(is_subsequence(out, sent));
  }
}

TEST_CASE("random deletion can remove exactly one chosen word") {
  // the worked example deletes only "dia"
  std::vector<std::string> want = kSentence;
  want.erase(std::find(want.begin(), want.end(), "dia"));
  bool found = false;
  for (std::uint64_t seed = 0; seed < 2000 && !found; ++seed) {
    Rng rng(seed);
    found = random_deletion(kSentence, 0.05, rng) == want;
  }
  CHECK(found);
}

TEST_CASE("augment_corpus counts, labels, determinism") {
  TokenDocs train;
  for (int i = 0; i < 360; ++i) {
    TokenDoc d;
    d.source_id = i;
    d.label = i % 2 == 0 ? Label::Positive : Label::Negative;
    d.tokens = {"foto", "bagus", "muka", "jelek", "aneh"};
    train.push_back(d);
  }
  LexiconSet lex;
  lex.thesaurus = tiny_thesaurus();

  AugmentConfig cfg;
  cfg.alpha = 0.1;
  cfg.n_aug = 16;
  cfg.seed = 42;
  TokenDocs out = augment_corpus(train, cfg, lex);
  CHECK(out.size() == 360u * 17u);  // each original plus 16 copies

  // label preservation and ordering by (source, copy)
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& d = out[i];
    CHECK(d.label == train[d.source_id].label);
    CHECK(d.source_id == static_cast<std::int64_t>(i / 17));
    CHECK(d.copy_index == static_cast<std::int32_t>(i % 17));
  }

  TokenDocs again = augment_corpus(train, cfg, lex);
  REQUIRE(again.size() == out.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    CHECK(again[i].tokens == out[i].tokens);

  cfg.n_aug = 0;
  TokenDocs same = augment_corpus(train, cfg, lex);
  REQUIRE(same.size() == train.size());
  for (std::size_t i = 0; i < train.size(); ++i)
    CHECK(same[i].tokens == train[i].tokens);
}

TEST_CASE("augment_corpus structural laws per operation") {
  LexiconSet lex;
  lex.thesaurus = tiny_thesaurus();
  TokenDocs train;
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    TokenDoc d;
    d.source_id = i;
    d.label = Label::Positive;
    d.tokens = random_sentence(rng, 10);
    train.push_back(d);
  }

  AugmentConfig cfg;
  cfg.alpha = 0.3;
  cfg.n_aug = 4;

  cfg.enabled_ops = {EdaOp::SR};
  for (const auto& d : augment_corpus(train, cfg, lex))
    CHECK(d.tokens.size() == train[d.source_id].tokens.size());

  cfg.enabled_ops = {EdaOp::RS};
  for (const auto& d : augment_corpus(train, cfg, lex))
    CHECK(bag(d.tokens) == bag(train[d.source_id].tokens));

  cfg.enabled_ops = {EdaOp::RI};
  for (const auto& d : augment_corpus(train, cfg, lex)) {
    std::size_t len = train[d.source_id].tokens.size();
    int n = num_edits(cfg.alpha, len);
    CHECK(d.tokens.size() >= len);
    CHECK(d.tokens.size() <= len + static_cast<std::size_t>(n));
  }

  cfg.enabled_ops = {EdaOp::RD};
  for (const auto& d : augment_corpus(train, cfg, lex)) {
    CHECK(d.tokens.size() >= 1);
    CHECK(d.tokens.size() <= train[d.source_id].tokens.size());
  }

  // SR with an empty thesaurus leaves token content untouched
  LexiconSet empty_lex;
  cfg.enabled_ops = {EdaOp::SR};
  for (const auto& d : augment_corpus(train, cfg, empty_lex))
    CHECK(d.tokens == train[d.source_id].tokens);

  // RD with p=0 yields copies identical to the source
  cfg.enabled_ops = {EdaOp::RD};
  cfg.alpha = 0.0;
  for (const auto& d : augment_corpus(train, cfg, empty_lex))
    CHECK(d.tokens == train[d.source_id].tokens);
}

TEST_CASE("augment_corpus input validation") {
  LexiconSet lex;
  AugmentConfig cfg;
  cfg.n_aug = 1;
  CHECK_THROWS_AS(augment_corpus({}, cfg, lex), EmptyInput);

  TokenDocs bad;
  bad.push_back({0, 0, Label::Positive, {}});
  CHECK_THROWS_AS(augment_corpus(bad, cfg, lex), EmptyInput);

  TokenDocs ok;
  ok.push_back({0, 0, Label::Positive, {"foto"}});
  cfg.enabled_ops = {};
  CHECK_THROWS_AS(augment_corpus(ok, cfg, lex), ConfigError);
}
