#include "edasvm/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "edasvm/csv.hpp"
#include "edasvm/errors.hpp"
#include "edasvm/rng.hpp"
#include "edasvm/sha256.hpp"

namespace edasvm {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::size_t Corpus::count(Label l) const {
  std::size_t n = 0;
  for (const auto& d : docs)
    if (d.label == l) ++n;
  return n;
}

Corpus load_dataset(const std::string& path, const std::string& text_column,
                    const std::string& label_column, const LabelMap& label_map) {
  CsvTable table = read_csv_file(path);
  auto text_col = table.column(text_column);
  if (!text_col) throw MissingColumn(text_column + " in " + path);
  auto label_col = table.column(label_column);
  if (!label_col) throw MissingColumn(label_column + " in " + path);
  if (table.rows.empty()) throw EmptyDataset(path);

  Corpus corpus;
  corpus.source_path = path;
  corpus.content_hash = sha256_file_hex(path);
  corpus.docs.reserve(table.rows.size());

  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    std::string text = trim(row[*text_col]);
    if (text.empty())
      throw EmptyDataset("row " + std::to_string(r) + " has empty text");
    auto it = label_map.find(row[*label_col]);
    if (it == label_map.end())
      throw UnknownLabel("\"" + row[*label_col] + "\" at row " + std::to_string(r));
    if (it->second != 1 && it->second != -1)
      throw UnknownLabel("label_map value must be +1 or -1");
    LabeledDocument doc;
    doc.id = static_cast<std::int64_t>(r);
    doc.text = std::move(text);
    doc.label = it->second == 1 ? Label::Positive : Label::Negative;
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

std::pair<Corpus, Corpus> split_train_test(const Corpus& corpus,
                                           const SplitConfig& cfg) {
  if (cfg.train_fraction <= 0.0 || cfg.train_fraction >= 1.0)
    throw DegenerateSplit("train_fraction must lie in (0,1)");
  const std::size_t n = corpus.size();
  if (n < 2) throw DegenerateSplit("need at least 2 documents");

  std::vector<std::size_t> train_idx, test_idx;

  auto split_group = [&](std::vector<std::size_t>& idx, std::uint64_t salt) {
    Rng rng(mix_seed(cfg.seed, salt));
    rng.shuffle(idx);
    // round-half-up keeps 0.9 * 200 at exactly 180
    auto want = static_cast<std::size_t>(
        std::floor(cfg.train_fraction * static_cast<double>(idx.size()) + 0.5));
    want = std::clamp<std::size_t>(want, 1, idx.size() - 1);
    for (std::size_t i = 0; i < idx.size(); ++i)
      (i < want ? train_idx : test_idx).push_back(idx[i]);
  };

  if (cfg.stratified) {
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < n; ++i)
      (corpus.docs[i].label == Label::Positive ? pos : neg).push_back(i);
    if (pos.size() < 2 || neg.size() < 2)
      throw DegenerateSplit("stratified split needs >= 2 documents per class");
    split_group(pos, 1);
    split_group(neg, 2);
  } else {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    split_group(all, 0);
  }

  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  auto take = [&](const std::vector<std::size_t>& idx) {
    Corpus side;
    side.source_path = corpus.source_path;
    side.content_hash = corpus.content_hash;
    side.docs.reserve(idx.size());
    for (auto i : idx) side.docs.push_back(corpus.docs[i]);
    return side;
  };
  return {take(train_idx), take(test_idx)};
}

}  // namespace edasvm
