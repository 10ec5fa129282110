#include "edasvm/augment.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "edasvm/errors.hpp"

namespace edasvm {

const char* eda_op_name(EdaOp op) {
  switch (op) {
    case EdaOp::SR: return "sr";
    case EdaOp::RI: return "ri";
    case EdaOp::RS: return "rs";
    case EdaOp::RD: return "rd";
  }
  return "?";
}

EdaOp eda_op_from_name(const std::string& name) {
  std::string s = name;
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "sr") return EdaOp::SR;
  if (s == "ri") return EdaOp::RI;
  if (s == "rs") return EdaOp::RS;
  if (s == "rd") return EdaOp::RD;
  throw ConfigError("unknown EDA operation \"" + name + "\"");
}

int num_edits(double alpha, std::size_t length) {
  if (length == 0) throw EmptyInput("num_edits on empty sentence");
  int n = static_cast<int>(std::floor(alpha * static_cast<double>(length) + 0.5));
  return std::max(1, n);
}

std::vector<std::string> synonym_replacement(const std::vector<std::string>& tokens,
                                             int n, const Thesaurus& thesaurus,
                                             const StopwordSet& stopwords,
                                             Rng& rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (stopwords.contains(tokens[i])) continue;
    const auto* syns = thesaurus.find(tokens[i]);
    if (syns && !syns->empty()) eligible.push_back(i);
  }
  std::vector<std::string> out = tokens;
  if (eligible.empty() || n <= 0) return out;
  rng.shuffle(eligible);
  std::size_t take = std::min<std::size_t>(eligible.size(), static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < take; ++k) {
    std::size_t pos = eligible[k];
    const auto& syns = *thesaurus.find(tokens[pos]);
    out[pos] = syns[rng.below(syns.size())];
  }
  return out;
}

std::vector<std::string> random_insertion(const std::vector<std::string>& tokens,
                                          int n, const Thesaurus& thesaurus,
                                          const StopwordSet& stopwords,
                                          Rng& rng) {
  std::vector<std::string> out = tokens;
  for (int k = 0; k < n; ++k) {
    for (int attempt = 0; attempt < 10; ++attempt) {
      const std::string& w = out[rng.below(out.size())];
      if (stopwords.contains(w)) continue;
      const auto* syns = thesaurus.find(w);
      if (!syns || syns->empty()) continue;
      const std::string& syn = (*syns)[rng.below(syns->size())];
      std::size_t at = rng.below(out.size() + 1);
      out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), syn);
      break;
    }
  }
  return out;
}

std::vector<std::string> random_swap(const std::vector<std::string>& tokens,
                                     int n, Rng& rng) {
  std::vector<std::string> out = tokens;
  if (out.size() < 2) return out;
  for (int k = 0; k < n; ++k) {
    std::size_t i = rng.below(out.size());
    std::size_t j = rng.below(out.size() - 1);
    if (j >= i) ++j;  // uniform over the other positions
    std::swap(out[i], out[j]);
  }
  return out;
}

std::vector<std::string> random_deletion(const std::vector<std::string>& tokens,
                                         double p, Rng& rng) {
  if (tokens.empty()) throw EmptyInput("random_deletion on empty sentence");
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (!(rng.uniform01() < p)) out.push_back(t);
  if (out.empty()) out.push_back(tokens[rng.below(tokens.size())]);
  return out;
}

TokenDocs augment_corpus(const TokenDocs& train, const AugmentConfig& cfg,
                         const LexiconSet& lexicons) {
  if (train.empty()) throw EmptyInput("augment_corpus on empty corpus");
  if (cfg.n_aug > 0 && cfg.enabled_ops.empty())
    throw ConfigError("n_aug > 0 requires at least one enabled operation");
  for (const auto& d : train)
    if (d.tokens.empty())
      throw EmptyInput("document " + std::to_string(d.source_id) +
                       " has no tokens");

  // canonical op order so the draw is stable regardless of config order
  std::vector<EdaOp> ops;
  for (EdaOp op : {EdaOp::SR, EdaOp::RI, EdaOp::RS, EdaOp::RD})
    if (std::find(cfg.enabled_ops.begin(), cfg.enabled_ops.end(), op) !=
        cfg.enabled_ops.end())
      ops.push_back(op);

  const std::size_t copies = static_cast<std::size_t>(cfg.n_aug) + 1;
  TokenDocs out(train.size() * copies);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t sidx = 0; sidx < static_cast<std::ptrdiff_t>(train.size());
       ++sidx) {
    const TokenDoc& src = train[static_cast<std::size_t>(sidx)];
    const std::size_t base = static_cast<std::size_t>(sidx) * copies;
    out[base] = src;
    for (std::size_t c = 1; c < copies; ++c) {
      Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(src.source_id),
                       static_cast<std::uint64_t>(c)));
      EdaOp op = ops[rng.below(ops.size())];
      TokenDoc copy;
      copy.source_id = src.source_id;
      copy.copy_index = static_cast<std::int32_t>(c);
      copy.label = src.label;
      switch (op) {
        case EdaOp::SR:
          copy.tokens = synonym_replacement(
              src.tokens, num_edits(cfg.alpha, src.tokens.size()),
              lexicons.thesaurus, lexicons.stopwords, rng);
          break;
        case EdaOp::RI:
          copy.tokens = random_insertion(
              src.tokens, num_edits(cfg.alpha, src.tokens.size()),
              lexicons.thesaurus, lexicons.stopwords, rng);
          break;
        case EdaOp::RS:
          copy.tokens = random_swap(
              src.tokens, num_edits(cfg.alpha, src.tokens.size()), rng);
          break;
        case EdaOp::RD:
          copy.tokens = random_deletion(src.tokens, cfg.alpha, rng);
          break;
      }
      out[base + c] = std::move(copy);
    }
  }
  return out;
}

}  // namespace edasvm
