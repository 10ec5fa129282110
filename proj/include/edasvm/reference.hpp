#pragma once

#include <vector>

#include "edasvm/svm.hpp"

namespace edasvm::reference {

// Serial counterparts of the OpenMP kernels. Tests assert bit-identical
// results; the benchmark compares throughput.
std::vector<double> kernel_row_serial(const TrainingSet& data,
                                      const SvmHyperParams& hyper,
                                      std::size_t i);
std::vector<SparseVector> transform_batch_serial(const TfIdfModel& model,
                                                 const TokenDocs& docs);
std::vector<double> decision_batch_serial(const SvmModel& model,
                                          const std::vector<SparseVector>& xs);

struct DualSolution {
  std::vector<double> alpha;
  double bias = 0.0;
  double objective = 0.0;
};

// Exact dual solver for tiny instances (<= 8 points): enumerates active
// sets {0, C, free} per point, solves the free block exactly, and verifies
// the KKT conditions. Falls back to exhaustive pairwise ascent when every
// candidate system is singular. Test oracle; independent of the SMO path.
DualSolution solve_dual(const TrainingSet& data, const SvmHyperParams& hyper);

double dual_objective(const TrainingSet& data, const SvmHyperParams& hyper,
                      const std::vector<double>& alpha);

// f(x) under an explicit alpha/bias pair (no support-vector pruning).
double decision_value(const TrainingSet& data, const SvmHyperParams& hyper,
                      const std::vector<double>& alpha, double bias,
                      const SparseVector& x);

}  // namespace edasvm::reference
