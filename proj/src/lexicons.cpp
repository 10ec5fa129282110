#include "edasvm/lexicons.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "edasvm/errors.hpp"
#include "edasvm/sha256.hpp"

namespace edasvm {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Trailing \r from CRLF files is stripped; other whitespace is an error.
std::string clean_line(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool has_space(const std::string& s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

bool is_lower_ascii(const std::string& s) {
  return std::none_of(s.begin(), s.end(),
                      [](unsigned char c) { return std::isupper(c); });
}

void check_word(const std::string& w, const std::string& path, std::size_t ln) {
  auto where = [&] { return path + ":" + std::to_string(ln); };
  if (w.empty()) throw MalformedLine("empty entry at " + where());
  if (has_space(w)) throw MalformedLine("whitespace inside entry at " + where());
  if (!is_lower_ascii(w)) throw MalformedLine("uppercase entry at " + where());
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

StopwordSet load_stopwords(const std::string& path) {
  std::string content = read_file(path);
  StopwordSet set;
  set.sha256 = sha256_hex(content);
  std::istringstream in(content);
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    line = clean_line(line);
    if (line.empty()) continue;
    check_word(line, path, ln);
    set.words.insert(line);
  }
  if (set.words.empty()) throw EmptyResource(path);
  return set;
}

NormalizationDict load_normalization(const std::string& path) {
  std::string content = read_file(path);
  NormalizationDict dict;
  dict.sha256 = sha256_hex(content);
  std::istringstream in(content);
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    line = clean_line(line);
    if (line.empty()) continue;
    auto parts = split(line, '\t');
    if (parts.size() != 2)
      throw MalformedLine("expected key<TAB>value at " + path + ":" +
                          std::to_string(ln));
    check_word(parts[0], path, ln);
    check_word(parts[1], path, ln);
    if (parts[0] == parts[1])
      throw MalformedLine("key maps to itself at " + path + ":" +
                          std::to_string(ln));
    if (!dict.map.emplace(parts[0], parts[1]).second)
      throw DuplicateKey(parts[0] + " at " + path + ":" + std::to_string(ln));
  }
  if (dict.map.empty()) throw EmptyResource(path);
  return dict;
}

RootDict load_roots(const std::string& path) {
  std::string content = read_file(path);
  RootDict dict;
  dict.sha256 = sha256_hex(content);
  std::istringstream in(content);
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    line = clean_line(line);
    if (line.empty()) continue;
    check_word(line, path, ln);
    dict.roots.insert(line);
  }
  if (dict.roots.empty()) throw EmptyResource(path);
  return dict;
}

Thesaurus load_thesaurus(const std::string& path) {
  std::string content = read_file(path);
  Thesaurus th;
  th.sha256 = sha256_hex(content);
  std::istringstream in(content);
  std::string line;
  std::size_t ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    line = clean_line(line);
    if (line.empty()) continue;
    auto parts = split(line, '\t');
    if (parts.size() != 2)
      throw MalformedLine("expected key<TAB>synonyms at " + path + ":" +
                          std::to_string(ln));
    check_word(parts[0], path, ln);
    std::vector<std::string> syns;
    for (const auto& s : split(parts[1], ',')) {
      check_word(s, path, ln);
      if (s == parts[0])
        throw MalformedLine("synonym list contains its own headword at " +
                            path + ":" + std::to_string(ln));
      if (std::find(syns.begin(), syns.end(), s) == syns.end())
        syns.push_back(s);
    }
    if (syns.empty()) throw MalformedLine("no synonyms at " + path + ":" +
                                          std::to_string(ln));
    if (!th.map.emplace(parts[0], std::move(syns)).second)
      throw DuplicateKey(parts[0] + " at " + path + ":" + std::to_string(ln));
  }
  if (th.map.empty()) throw EmptyResource(path);
  return th;
}

LexiconSet load_lexicons(const std::string& stopword_path,
                         const std::string& normalization_path,
                         const std::string& root_path,
                         const std::string& thesaurus_path) {
  LexiconSet set;
  set.stopwords = load_stopwords(stopword_path);
  set.normalization = load_normalization(normalization_path);
  set.roots = load_roots(root_path);
  set.thesaurus = load_thesaurus(thesaurus_path);
  return set;
}

}  // namespace edasvm
