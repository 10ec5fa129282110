#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace edasvm {

// All four lexical resources are immutable after load and shareable
// across threads. Lookups are exact-match on lowercase tokens.

struct StopwordSet {
  std::unordered_set<std::string> words;
  std::string sha256;

  bool contains(const std::string& w) const { return words.count(w) != 0; }
  std::size_t size() const { return words.size(); }
};

struct NormalizationDict {
  std::unordered_map<std::string, std::string> map;  // nonstandard -> standard
  std::string sha256;
};

struct RootDict {
  std::unordered_set<std::string> roots;
  std::string sha256;

  bool contains(const std::string& w) const { return roots.count(w) != 0; }
};

struct Thesaurus {
  std::unordered_map<std::string, std::vector<std::string>> map;
  std::string sha256;

  // nullptr when the word has no synonyms.
  const std::vector<std::string>* find(const std::string& w) const {
    auto it = map.find(w);
    return it == map.end() ? nullptr : &it->second;
  }
};

struct LexiconSet {
  StopwordSet stopwords;
  NormalizationDict normalization;
  RootDict roots;
  Thesaurus thesaurus;
};

// File formats: one word per line (stopwords, roots);
// key<TAB>value (normalization); key<TAB>comma-separated synonyms (thesaurus).
StopwordSet load_stopwords(const std::string& path);
NormalizationDict load_normalization(const std::string& path);
RootDict load_roots(const std::string& path);
Thesaurus load_thesaurus(const std::string& path);

LexiconSet load_lexicons(const std::string& stopword_path,
                         const std::string& normalization_path,
                         const std::string& root_path,
                         const std::string& thesaurus_path);

}  // namespace edasvm
