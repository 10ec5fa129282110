#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "edasvm/tfidf.hpp"

namespace edasvm {

struct SvmHyperParams {
  double reg_c = 1e-4;  // box constraint C
  double gamma = 100.0; // kernel scale
  int degree = 2;
  double coef0 = 0.0;
  std::uint64_t seed = 42;
  double tol = 1e-3;    // KKT tolerance
  int max_passes = 10;  // full passes without progress before giving up
  std::size_t cache_bytes = std::size_t(1) << 30;
};

// K(x, y) = (gamma * <x,y> + coef0)^degree
double poly_kernel(const SparseVector& x, const SparseVector& y,
                   const SvmHyperParams& hyper);

struct TrainingSet {
  std::vector<SparseVector> x;
  std::vector<int> y;  // +1 / -1
};

struct SvmModel {
  std::vector<SparseVector> support_vectors;
  std::vector<double> dual_coefs;  // alpha_i * y_i
  double bias = 0.0;
  SvmHyperParams hyper;
  TfIdfModel tfidf;          // empty when trained on raw vectors
  bool has_tfidf = false;
  std::string dataset_hash;  // provenance, optional
  std::string lexicon_hash;
};

struct TrainDiagnostics {
  std::vector<double> alpha;  // full alpha vector over the training set
  double dual_objective = 0.0;
  int passes = 0;
  std::size_t kernel_rows_computed = 0;
};

// Sequential minimal optimization over the dual. Deterministic for a given
// seed and independent of the OpenMP thread count. Throws DegenerateLabels
// when only one class is present, NonFinite on kernel overflow.
SvmModel train_smo(const TrainingSet& data, const SvmHyperParams& hyper,
                   TrainDiagnostics* diag = nullptr);

// f(x) = sum_i dual_coef_i * K(sv_i, x) + b
double decision(const SvmModel& model, const SparseVector& x);
// +1 when decision >= 0, else -1 (ties go positive).
int predict(const SvmModel& model, const SparseVector& x);
std::vector<int> predict_batch(const SvmModel& model,
                               const std::vector<SparseVector>& xs);
std::vector<double> decision_batch(const SvmModel& model,
                                   const std::vector<SparseVector>& xs);

void save_model(const SvmModel& model, const std::string& path);
SvmModel load_model(const std::string& path);

// Kernel evaluations against every training point, as one contiguous row.
// Used by the trainer and by the serial-vs-parallel benchmark.
std::vector<double> kernel_row(const TrainingSet& data,
                               const SvmHyperParams& hyper, std::size_t i);

}  // namespace edasvm
