#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edasvm/lexicons.hpp"
#include "edasvm/preprocess.hpp"
#include "edasvm/rng.hpp"

namespace edasvm {

enum class EdaOp { SR, RI, RS, RD };

const char* eda_op_name(EdaOp op);
// Accepts "sr", "ri", "rs", "rd" (case-insensitive). Throws ConfigError.
EdaOp eda_op_from_name(const std::string& name);

struct AugmentConfig {
  double alpha = 0.1;  // change rate; doubles as deletion probability for RD
  int n_aug = 0;       // augmented copies per original
  std::vector<EdaOp> enabled_ops{EdaOp::SR, EdaOp::RI, EdaOp::RS, EdaOp::RD};
  std::uint64_t seed = 42;
};

// n = max(1, round_half_up(alpha * length)); length must be >= 1.
int num_edits(double alpha, std::size_t length);

// Up to n distinct non-stopword positions with a thesaurus entry get a
// uniformly chosen synonym. Length never changes.
std::vector<std::string> synonym_replacement(const std::vector<std::string>& tokens,
                                             int n, const Thesaurus& thesaurus,
                                             const StopwordSet& stopwords,
                                             Rng& rng);

// n attempted insertions, each with up to 10 retries to find a non-stopword
// token that has a synonym; the synonym lands at a uniform random position.
std::vector<std::string> random_insertion(const std::vector<std::string>& tokens,
                                          int n, const Thesaurus& thesaurus,
                                          const StopwordSet& stopwords,
                                          Rng& rng);

// n swaps of two uniform random distinct positions (no-op on length 1).
std::vector<std::string> random_swap(const std::vector<std::string>& tokens,
                                     int n, Rng& rng);

// Each token dies independently with probability p; if everything dies,
// one uniformly chosen token survives.
std::vector<std::string> random_deletion(const std::vector<std::string>& tokens,
                                         double p, Rng& rng);

// Each copy applies exactly one operation drawn uniformly from enabled_ops.
// Copy RNG is seeded by (cfg.seed, source_id, copy_index), so the result is
// independent of worker count and processing order. Output order is
// (input order, copy_index) with copy 0 the original.
TokenDocs augment_corpus(const TokenDocs& train, const AugmentConfig& cfg,
                         const LexiconSet& lexicons);

}  // namespace edasvm
