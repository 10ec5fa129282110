#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "edasvm/preprocess.hpp"

namespace edasvm {

struct SparseVector {
  // strictly increasing indices, no explicit zeros
  std::vector<std::pair<std::uint32_t, double>> entries;
  std::uint32_t dim = 0;

  double dot(const SparseVector& other) const;
};

// w_tf = 1 + log10(tf) for tf > 0, else 0.
double weight_tf(std::uint64_t tf);

// idf_t = log10(N / df_t). Throws DomainError unless 1 <= df <= n_docs.
double idf(std::size_t n_docs, std::uint64_t df);

// Vocabulary, document frequencies and idf weights fit on training data only.
// Terms are indexed in lexicographic order.
class TfIdfModel {
 public:
  // Throws EmptyInput on an empty training set.
  static TfIdfModel fit(const TokenDocs& train);

  // weight(t) = w_tf(tf) * idf(t); out-of-vocabulary terms are dropped.
  // No normalization unless l2_normalize is set.
  SparseVector transform(const std::vector<std::string>& tokens) const;
  std::vector<SparseVector> transform_batch(const TokenDocs& docs) const;

  std::size_t n_docs() const { return n_docs_; }
  std::size_t vocab_size() const { return terms_.size(); }
  const std::vector<std::string>& terms() const { return terms_; }
  std::uint64_t df_of(const std::string& term) const;
  double idf_of(const std::string& term) const;

  // SHA-256 over the canonical serialized form.
  std::string vocab_hash() const;

  void save(std::ostream& out) const;
  static TfIdfModel load(std::istream& in);

  bool l2_normalize = false;

 private:
  std::vector<std::string> terms_;                      // index -> term
  std::unordered_map<std::string, std::uint32_t> vocab_;  // term -> index
  std::vector<std::uint64_t> df_;
  std::vector<double> idf_;
  std::size_t n_docs_ = 0;
};

}  // namespace edasvm
