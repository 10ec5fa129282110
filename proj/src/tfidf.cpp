#include "edasvm/tfidf.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "edasvm/errors.hpp"
#include "edasvm/sha256.hpp"

namespace edasvm {

double SparseVector::dot(const SparseVector& other) const {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < entries.size() && j < other.entries.size()) {
    std::uint32_t a = entries[i].first, b = other.entries[j].first;
    if (a == b) {
      sum += entries[i].second * other.entries[j].second;
      ++i;
      ++j;
    } else if (a < b) {
      ++i;
    } else {
      ++j;
    }
  }
  return sum;
}

double weight_tf(std::uint64_t tf) {
  return tf > 0 ? 1.0 + std::log10(static_cast<double>(tf)) : 0.0;
}

double idf(std::size_t n_docs, std::uint64_t df) {
  if (df == 0 || df > n_docs)
    throw DomainError("df must lie in [1, N]; df=" + std::to_string(df) +
                      " N=" + std::to_string(n_docs));
  return std::log10(static_cast<double>(n_docs) / static_cast<double>(df));
}

TfIdfModel TfIdfModel::fit(const TokenDocs& train) {
  if (train.empty()) throw EmptyInput("TF-IDF fit on empty training set");

  // std::map gives the lexicographic term order directly
  std::map<std::string, std::uint64_t> df_by_term;
  for (const auto& doc : train) {
    std::vector<std::string> uniq = doc.tokens;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (auto& t : uniq) ++df_by_term[t];
  }

  TfIdfModel model;
  model.n_docs_ = train.size();
  model.terms_.reserve(df_by_term.size());
  model.df_.reserve(df_by_term.size());
  model.idf_.reserve(df_by_term.size());
  for (auto& [term, df_t] : df_by_term) {
    model.vocab_.emplace(term, static_cast<std::uint32_t>(model.terms_.size()));
    model.terms_.push_back(term);
    model.df_.push_back(df_t);
    model.idf_.push_back(idf(model.n_docs_, df_t));
  }
  return model;
}

SparseVector TfIdfModel::transform(const std::vector<std::string>& tokens) const {
  std::map<std::uint32_t, std::uint64_t> counts;  // sorted by index
  for (const auto& t : tokens) {
    auto it = vocab_.find(t);
    if (it != vocab_.end()) ++counts[it->second];
  }
  SparseVector v;
  v.dim = static_cast<std::uint32_t>(terms_.size());
  v.entries.reserve(counts.size());
  for (auto& [idx, tf] : counts) {
    double w = weight_tf(tf) * idf_[idx];
    if (w != 0.0) v.entries.emplace_back(idx, w);
  }
  if (l2_normalize && !v.entries.empty()) {
    double norm2 = 0.0;
    for (auto& [idx, w] : v.entries) norm2 += w * w;
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& [idx, w] : v.entries) w *= inv;
  }
  return v;
}

std::vector<SparseVector> TfIdfModel::transform_batch(const TokenDocs& docs) const {
  std::vector<SparseVector> out(docs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(docs.size()); ++i)
    out[static_cast<std::size_t>(i)] =
        transform(docs[static_cast<std::size_t>(i)].tokens);
  return out;
}

std::uint64_t TfIdfModel::df_of(const std::string& term) const {
  auto it = vocab_.find(term);
  if (it == vocab_.end()) throw DomainError("term not in vocabulary: " + term);
  return df_[it->second];
}

double TfIdfModel::idf_of(const std::string& term) const {
  auto it = vocab_.find(term);
  if (it == vocab_.end()) throw DomainError("term not in vocabulary: " + term);
  return idf_[it->second];
}

void TfIdfModel::save(std::ostream& out) const {
  out << "tfidf v1\n";
  out << "n_docs " << n_docs_ << "\n";
  out << "l2_normalize " << (l2_normalize ? 1 : 0) << "\n";
  out << "terms " << terms_.size() << "\n";
  char buf[64];
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    // hexfloat keeps idf bit-exact across save/load
    std::snprintf(buf, sizeof(buf), "%a", idf_[i]);
    out << terms_[i] << "\t" << df_[i] << "\t" << buf << "\n";
  }
}

TfIdfModel TfIdfModel::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "tfidf v1")
    throw SchemaMismatch("bad TF-IDF header");
  TfIdfModel model;
  std::size_t n_terms = 0;
  std::string key;
  {
    std::getline(in, line);
    std::istringstream ss(line);
    ss >> key >> model.n_docs_;
    if (key != "n_docs") throw SchemaMismatch("expected n_docs");
  }
  {
    std::getline(in, line);
    std::istringstream ss(line);
    int flag = 0;
    ss >> key >> flag;
    if (key != "l2_normalize") throw SchemaMismatch("expected l2_normalize");
    model.l2_normalize = flag != 0;
  }
  {
    std::getline(in, line);
    std::istringstream ss(line);
    ss >> key >> n_terms;
    if (key != "terms") throw SchemaMismatch("expected terms count");
  }
  model.terms_.reserve(n_terms);
  model.df_.reserve(n_terms);
  model.idf_.reserve(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) {
    if (!std::getline(in, line)) throw CorruptFile("truncated TF-IDF model");
    auto tab1 = line.find('\t');
    auto tab2 = line.find('\t', tab1 + 1);
    if (tab1 == std::string::npos || tab2 == std::string::npos)
      throw CorruptFile("bad TF-IDF term record");
    std::string term = line.substr(0, tab1);
    std::uint64_t df_t = std::stoull(line.substr(tab1 + 1, tab2 - tab1 - 1));
    double idf_t = std::strtod(line.c_str() + tab2 + 1, nullptr);
    model.vocab_.emplace(term, static_cast<std::uint32_t>(model.terms_.size()));
    model.terms_.push_back(std::move(term));
    model.df_.push_back(df_t);
    model.idf_.push_back(idf_t);
  }
  return model;
}

std::string TfIdfModel::vocab_hash() const {
  std::ostringstream ss;
  save(ss);
  return sha256_hex(ss.str());
}

}  // namespace edasvm
