#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace edasvm {

enum class Label : int { Positive = +1, Negative = -1 };

inline int label_value(Label l) { return static_cast<int>(l); }

struct LabeledDocument {
  std::int64_t id = 0;
  std::string text;   // raw comment, UTF-8
  Label label = Label::Positive;
};

struct Corpus {
  std::vector<LabeledDocument> docs;
  std::string source_path;
  std::string content_hash;  // SHA-256 of the raw file

  std::size_t size() const { return docs.size(); }
  std::size_t count(Label l) const;
};

struct SplitConfig {
  double train_fraction = 0.9;
  std::uint64_t seed = 42;
  bool stratified = true;
};

// Maps raw label strings (e.g. "positive") to +1 / -1.
using LabelMap = std::map<std::string, int>;

// Header-row CSV, RFC-4180. Ids are assigned by row order starting at 0.
// Rows whose text is empty after trimming are rejected.
Corpus load_dataset(const std::string& path, const std::string& text_column,
                    const std::string& label_column, const LabelMap& label_map);

// Deterministic, disjoint, exhaustive. Stratified mode keeps per-class
// proportions within one document of train_fraction.
std::pair<Corpus, Corpus> split_train_test(const Corpus& corpus,
                                           const SplitConfig& cfg);

}  // namespace edasvm
