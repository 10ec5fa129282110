#include "edasvm/preprocess.hpp"

#include <omp.h>

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>

#include "edasvm/csv.hpp"
#include "edasvm/errors.hpp"

namespace edasvm {

std::string case_fold(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

namespace {

// Decodes one UTF-8 codepoint at i; advances i past it. Invalid bytes are
// consumed one at a time and reported as U+FFFD.
char32_t decode_utf8(std::string_view s, std::size_t& i, std::size_t& len) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  std::size_t n;
  char32_t cp;
  if (c < 0x80) {
    n = 1;
    cp = c;
  } else if ((c & 0xE0) == 0xC0) {
    n = 2;
    cp = c & 0x1F;
  } else if ((c & 0xF0) == 0xE0) {
    n = 3;
    cp = c & 0x0F;
  } else if ((c & 0xF8) == 0xF0) {
    n = 4;
    cp = c & 0x07;
  } else {
    ++i;
    len = 1;
    return 0xFFFD;
  }
  if (i + n > s.size()) {
    ++i;
    len = 1;
    return 0xFFFD;
  }
  for (std::size_t k = 1; k < n; ++k) {
    unsigned char cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) {
      ++i;
      len = 1;
      return 0xFFFD;
    }
    cp = (cp << 6) | (cc & 0x3F);
  }
  i += n;
  len = n;
  return cp;
}

bool at_word_boundary(std::string_view s, std::size_t i) {
  if (i == 0) return true;
  unsigned char prev = static_cast<unsigned char>(s[i - 1]);
  return std::isspace(prev) || prev == '(' || prev == '"' || prev == '\'';
}

bool is_url_start(std::string_view s, std::size_t i) {
  return s.substr(i).starts_with("http://") ||
         s.substr(i).starts_with("https://") ||
         (at_word_boundary(s, i) && s.substr(i).starts_with("www."));
}

}  // namespace

std::string clean_text(std::string_view text, const PreprocessConfig& cfg) {
  std::string out;
  out.reserve(text.size());

  std::size_t i = 0;
  while (i < text.size()) {
    if (cfg.strip_urls && is_url_start(text, i)) {
      while (i < text.size() &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
      out += ' ';
      continue;
    }
    if (cfg.strip_mentions && text[i] == '@') {
      ++i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_' || text[i] == '.'))
        ++i;
      out += ' ';
      continue;
    }
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 0x80) {
      if (std::isalpha(c)) {
        out += static_cast<char>(c);
      } else if (std::isdigit(c)) {
        out += cfg.strip_digits ? ' ' : static_cast<char>(c);
      } else {
        out += ' ';  // punctuation, whitespace, control
      }
      ++i;
      continue;
    }
    std::size_t start = i, len = 0;
    char32_t cp = decode_utf8(text, i, len);
    bool punct = (cp >= 0x2000 && cp <= 0x206F) || cp == 0xFFFD;
    bool symbol = cp >= 0x2190;  // arrows, symbols, CJK, emoji planes
    if (punct || (symbol && cfg.strip_emoji)) {
      out += ' ';
    } else {
      out.append(text.substr(start, len));
    }
  }

  // collapse whitespace runs, trim
  std::string collapsed;
  collapsed.reserve(out.size());
  bool pending_space = false;
  for (char c : out) {
    if (c == ' ') {
      pending_space = !collapsed.empty();
    } else {
      if (pending_space) collapsed += ' ';
      pending_space = false;
      collapsed += c;
    }
  }
  return collapsed;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) tokens.emplace_back(text.substr(start, i - start));
  }
  return tokens;
}

std::string normalize_token(const std::string& token,
                            const NormalizationDict& dict) {
  auto it = dict.map.find(token);
  return it == dict.map.end() ? token : it->second;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const StopwordSet& stopwords) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    if (!stopwords.contains(t)) out.push_back(t);
  return out;
}

namespace {

// Strips the first matching suffix, provided at least 2 chars remain.
bool strip_any_suffix(std::string& w,
                      std::initializer_list<const char*> suffixes) {
  for (const char* suf : suffixes) {
    std::size_t n = std::strlen(suf);
    if (w.size() >= n + 2 && w.compare(w.size() - n, n, suf) == 0) {
      w.resize(w.size() - n);
      return true;
    }
  }
  return false;
}

bool strip_any_prefix(std::string& w,
                      std::initializer_list<const char*> prefixes) {
  for (const char* pre : prefixes) {
    std::size_t n = std::strlen(pre);
    if (w.size() >= n + 2 && w.compare(0, n, pre) == 0) {
      w.erase(0, n);
      return true;
    }
  }
  return false;
}

}  // namespace

std::string stem_token(const std::string& token, const RootDict& roots) {
  if (roots.contains(token)) return token;
  std::string w = token;

  if (strip_any_suffix(w, {"lah", "kah", "tah", "pun"}) && roots.contains(w))
    return w;
  if (strip_any_suffix(w, {"ku", "mu", "nya"}) && roots.contains(w))
    return w;
  if (strip_any_suffix(w, {"i", "kan", "an"}) && roots.contains(w))
    return w;

  // longest variants first so meng- is not read as men-
  for (int iter = 0; iter < 3; ++iter) {
    if (!strip_any_prefix(w, {"di", "ke", "se", "ter", "te", "ber", "be",
                              "meng", "meny", "mem", "men", "peng", "peny",
                              "pem", "pen"}))
      break;
    if (roots.contains(w)) return w;
  }
  return token;
}

TokenList preprocess_document(const LabeledDocument& doc,
                              const LexiconSet& lexicons,
                              const PreprocessConfig& cfg) {
  std::string cleaned = clean_text(case_fold(doc.text), cfg);
  std::vector<std::string> tokens = tokenize(cleaned);

  if (cfg.normalize)
    for (auto& t : tokens) t = normalize_token(t, lexicons.normalization);
  if (cfg.remove_stop) tokens = remove_stopwords(tokens, lexicons.stopwords);
  if (cfg.stem)
    for (auto& t : tokens) t = stem_token(t, lexicons.roots);

  if (tokens.empty())
    throw EmptyAfterPreprocess("document " + std::to_string(doc.id));
  return TokenList{std::move(tokens), doc.id};
}

TokenDocs preprocess_corpus(const Corpus& corpus, const LexiconSet& lexicons,
                            const PreprocessConfig& cfg,
                            PreprocessStats* stats) {
  const std::size_t n = corpus.size();
  std::vector<TokenDoc> slots(n);
  std::vector<char> kept(n, 0);

#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    const auto& doc = corpus.docs[static_cast<std::size_t>(i)];
    try {
      TokenList tl = preprocess_document(doc, lexicons, cfg);
      auto& slot = slots[static_cast<std::size_t>(i)];
      slot.source_id = doc.id;
      slot.copy_index = 0;
      slot.label = doc.label;
      slot.tokens = std::move(tl.tokens);
      kept[static_cast<std::size_t>(i)] = 1;
    } catch (const EmptyAfterPreprocess&) {
      kept[static_cast<std::size_t>(i)] = 0;
    }
  }

  TokenDocs out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (kept[i]) {
      out.push_back(std::move(slots[i]));
    } else if (stats) {
      stats->dropped_ids.push_back(corpus.docs[i].id);
    }
  }
  return out;
}

void write_token_csv(const std::string& path, const TokenDocs& docs) {
  std::string text = csv_row({"id", "label", "tokens"});
  for (const auto& d : docs) {
    std::string joined;
    for (std::size_t i = 0; i < d.tokens.size(); ++i) {
      if (i) joined += ' ';
      joined += d.tokens[i];
    }
    text += csv_row({std::to_string(d.source_id),
                     std::to_string(label_value(d.label)), joined});
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
}

TokenDocs read_token_csv(const std::string& path) {
  CsvTable table = read_csv_file(path);
  auto id_col = table.column("id");
  auto label_col = table.column("label");
  auto tok_col = table.column("tokens");
  if (!id_col || !label_col || !tok_col)
    throw MissingColumn("token CSV needs id,label,tokens: " + path);
  TokenDocs docs;
  docs.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    TokenDoc d;
    d.source_id = std::stoll(row[*id_col]);
    int lv = std::stoi(row[*label_col]);
    if (lv != 1 && lv != -1)
      throw UnknownLabel("label must be +1/-1 in " + path);
    d.label = lv == 1 ? Label::Positive : Label::Negative;
    d.tokens = tokenize(row[*tok_col]);
    docs.push_back(std::move(d));
  }
  return docs;
}

}  // namespace edasvm
