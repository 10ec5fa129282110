#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edasvm/corpus.hpp"
#include "edasvm/lexicons.hpp"

namespace edasvm {

struct TokenList {
  std::vector<std::string> tokens;
  std::int64_t source_id = -1;
};

// One preprocessed (or augmented) document in a working set.
struct TokenDoc {
  std::int64_t source_id = -1;
  std::int32_t copy_index = 0;  // 0 = original, >0 = augmented copy
  Label label = Label::Positive;
  std::vector<std::string> tokens;
};

using TokenDocs = std::vector<TokenDoc>;

struct PreprocessConfig {
  bool strip_mentions = true;
  bool strip_urls = true;
  bool strip_digits = true;
  bool strip_emoji = true;
  // Case folding, cleaning and tokenization always run.
  bool normalize = true;
  bool remove_stop = true;
  bool stem = true;
};

// ASCII lowercasing; multi-byte UTF-8 passes through unchanged. Idempotent.
std::string case_fold(std::string_view text);

// Punctuation (and per cfg: mentions, URLs, digits, emoji) become spaces;
// runs of whitespace collapse; result is trimmed. May return "".
std::string clean_text(std::string_view text, const PreprocessConfig& cfg);

// Whitespace split; empty fragments dropped.
std::vector<std::string> tokenize(std::string_view text);

// Single dictionary hop; identity on miss. No transitive chaining.
std::string normalize_token(const std::string& token,
                            const NormalizationDict& dict);

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordSet& stopwords);

// Dictionary-checked confix stripping. Strips particle suffixes
// (-lah/-kah/-tah/-pun), possessives (-ku/-mu/-nya), derivational
// suffixes (-i/-kan/-an) and up to three derivational prefixes
// (di-/ke-/se-/te(r)-/be(r)-/me*/pe*), checking the root dictionary after
// every strip. Returns the original token when no root is ever found.
std::string stem_token(const std::string& token, const RootDict& roots);

// Full pipeline: case_fold -> clean_text -> tokenize -> normalize ->
// remove_stopwords -> stem. Throws EmptyAfterPreprocess when nothing is left.
TokenList preprocess_document(const LabeledDocument& doc,
                              const LexiconSet& lexicons,
                              const PreprocessConfig& cfg);

struct PreprocessStats {
  std::vector<std::int64_t> dropped_ids;  // documents that reduced to nothing
};

// Parallel over documents; output order matches input order. Empty results
// are dropped and recorded in stats.
TokenDocs preprocess_corpus(const Corpus& corpus, const LexiconSet& lexicons,
                            const PreprocessConfig& cfg,
                            PreprocessStats* stats = nullptr);

// Token CSV (id,label,tokens) used by the preprocess/augment subcommands.
void write_token_csv(const std::string& path, const TokenDocs& docs);
TokenDocs read_token_csv(const std::string& path);

}  // namespace edasvm
