#include "edasvm/svm.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <list>
#include <sstream>

#include "edasvm/errors.hpp"
#include "edasvm/rng.hpp"

namespace edasvm {

namespace {

double pow_int(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

double poly_kernel(const SparseVector& x, const SparseVector& y,
                   const SvmHyperParams& hyper) {
  if (x.dim != y.dim)
    throw DimensionMismatch("kernel arguments: " + std::to_string(x.dim) +
                            " vs " + std::to_string(y.dim));
  return pow_int(hyper.gamma * x.dot(y) + hyper.coef0, hyper.degree);
}

namespace {

// Gram rows on demand. Dense storage up to kDenseLimit training points,
// otherwise an LRU row cache bounded by hyper.cache_bytes. The two most
// recently used rows are never evicted; the SMO step holds both.
class KernelCache {
 public:
  static constexpr std::size_t kDenseLimit = 4000;

  KernelCache(const TrainingSet& data, const SvmHyperParams& hyper)
      : data_(data), hyper_(hyper), n_(data.x.size()) {
    if (n_ <= kDenseLimit) {
      dense_.assign(n_ * n_, 0.0);
      dense_have_.assign(n_, 0);
    } else {
      rows_.resize(n_);
      std::size_t row_bytes = n_ * sizeof(double);
      max_rows_ = std::max<std::size_t>(2, hyper.cache_bytes / row_bytes);
    }
  }

  const double* row(std::size_t i) {
    if (!dense_.empty()) {
      if (!dense_have_[i]) {
        fill_row(i, dense_.data() + i * n_);
        dense_have_[i] = 1;
      }
      return dense_.data() + i * n_;
    }
    if (rows_[i].data) {
      touch(i);
      return rows_[i].data.get();
    }
    if (resident_.size() >= max_rows_) evict_one();
    rows_[i].data = std::make_unique<double[]>(n_);
    fill_row(i, rows_[i].data.get());
    resident_.push_front(i);
    rows_[i].where = resident_.begin();
    return rows_[i].data.get();
  }

  std::size_t rows_computed() const { return rows_computed_; }

 private:
  void fill_row(std::size_t i, double* out) {
    ++rows_computed_;
    const SparseVector& xi = data_.x[i];
    bool bad = false;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n_); ++k) {
      double v = pow_int(hyper_.gamma * xi.dot(data_.x[static_cast<std::size_t>(k)]) +
                             hyper_.coef0,
                         hyper_.degree);
      out[static_cast<std::size_t>(k)] = v;
      if (!std::isfinite(v)) bad = true;
    }
    if (bad)
      throw NonFinite("kernel row " + std::to_string(i) +
                      " overflowed; see gamma/degree");
  }

  void touch(std::size_t i) {
    resident_.erase(rows_[i].where);
    resident_.push_front(i);
    rows_[i].where = resident_.begin();
  }

  void evict_one() {
    if (resident_.size() <= 2) return;  // the step holds two rows at once
    std::size_t victim = resident_.back();
    rows_[victim].data.reset();
    resident_.pop_back();
  }

  struct RowSlot {
    std::unique_ptr<double[]> data;
    std::list<std::size_t>::iterator where;
  };

  const TrainingSet& data_;
  const SvmHyperParams& hyper_;
  std::size_t n_;
  std::vector<double> dense_;
  std::vector<char> dense_have_;
  std::vector<RowSlot> rows_;
  std::list<std::size_t> resident_;
  std::size_t max_rows_ = 0;
  std::size_t rows_computed_ = 0;
};

class SmoSolver {
 public:
  SmoSolver(const TrainingSet& data, const SvmHyperParams& hyper)
      : data_(data),
        hyper_(hyper),
        n_(data.x.size()),
        cache_(data, hyper),
        rng_(hyper.seed) {
    alpha_.assign(n_, 0.0);
    errors_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      errors_[i] = -static_cast<double>(data_.y[i]);
    scan_order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) scan_order_[i] = i;
    rng_.shuffle(scan_order_);
  }

  void solve() {
    bool examine_all = true;
    int stalled_full_passes = 0;
    while (true) {
      std::size_t changed = 0;
      pass_alpha_delta_ = 0.0;
      if (examine_all) {
        ++full_passes_;
        for (std::size_t i : scan_order_) changed += examine(i);
      } else {
        for (std::size_t i : scan_order_)
          if (is_free(alpha_[i])) changed += examine(i);
      }
      if (examine_all) {
        if (changed == 0) break;  // KKT satisfied everywhere within tol
        double scale = 1.0;
        for (double a : alpha_) scale += a;
        if (pass_alpha_delta_ < 1e-14 * scale) {
          if (++stalled_full_passes >= hyper_.max_passes) break;
        } else {
          stalled_full_passes = 0;
        }
        examine_all = false;
      } else if (changed == 0) {
        examine_all = true;
      }
    }
  }

  double bias() const { return bias_final_; }
  const std::vector<double>& alpha() const { return alpha_; }
  int passes() const { return full_passes_; }
  std::size_t rows_computed() const { return cache_.rows_computed(); }

  // D(alpha) = sum(alpha) - 1/2 sum_i alpha_i y_i g_i, with g from the
  // maintained error cache.
  double dual_objective() const {
    double obj = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double g = errors_[i] + data_.y[i] - b_;
      obj += alpha_[i] - 0.5 * alpha_[i] * data_.y[i] * g;
    }
    return obj;
  }

  void finalize_bias() {
    double sum_free = 0.0;
    std::size_t n_free = 0;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n_; ++i) {
      double g = errors_[i] + data_.y[i] - b_;
      double candidate = data_.y[i] - g;
      if (is_free(alpha_[i])) {
        sum_free += candidate;
        ++n_free;
      } else if ((alpha_[i] == 0.0 && data_.y[i] > 0) ||
                 (alpha_[i] >= hyper_.reg_c && data_.y[i] < 0)) {
        lo = std::max(lo, candidate);
      } else {
        hi = std::min(hi, candidate);
      }
    }
    if (n_free > 0) {
      bias_final_ = sum_free / static_cast<double>(n_free);
    } else if (std::isfinite(lo) && std::isfinite(hi)) {
      bias_final_ = 0.5 * (lo + hi);
    } else if (std::isfinite(lo)) {
      bias_final_ = lo;
    } else if (std::isfinite(hi)) {
      bias_final_ = hi;
    } else {
      bias_final_ = b_;
    }
  }

 private:
  bool is_free(double a) const { return a > 0.0 && a < hyper_.reg_c; }

  std::size_t examine(std::size_t i2) {
    const double y2 = data_.y[i2];
    const double alph2 = alpha_[i2];
    const double e2 = errors_[i2];
    const double r2 = e2 * y2;
    const bool violates = (r2 < -hyper_.tol && alph2 < hyper_.reg_c) ||
                          (r2 > hyper_.tol && alph2 > 0.0);
    if (!violates) return 0;

    // second-choice heuristic: largest |E1 - E2| among free multipliers
    std::size_t best = n_;
    double best_gap = -1.0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == i2 || !is_free(alpha_[i])) continue;
      double gap = std::fabs(errors_[i] - e2);
      if (gap > best_gap) {
        best_gap = gap;
        best = i;
      }
    }
    if (best < n_ && take_step(best, i2)) return 1;

    // sweep free multipliers from a random start
    std::size_t start = rng_.below(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t i1 = (start + k) % n_;
      if (i1 == i2 || !is_free(alpha_[i1])) continue;
      if (take_step(i1, i2)) return 1;
    }
    // sweep everything from a random start
    start = rng_.below(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t i1 = (start + k) % n_;
      if (i1 == i2) continue;
      if (take_step(i1, i2)) return 1;
    }
    return 0;
  }

  bool take_step(std::size_t i1, std::size_t i2) {
    if (i1 == i2) return false;
    const double c = hyper_.reg_c;
    const double alph1 = alpha_[i1], alph2 = alpha_[i2];
    const double y1 = data_.y[i1], y2 = data_.y[i2];
    const double e1 = errors_[i1], e2 = errors_[i2];
    const double s = y1 * y2;

    double lo, hi;
    if (y1 != y2) {
      lo = std::max(0.0, alph2 - alph1);
      hi = std::min(c, c + alph2 - alph1);
    } else {
      lo = std::max(0.0, alph1 + alph2 - c);
      hi = std::min(c, alph1 + alph2);
    }
    if (lo >= hi) return false;

    const double* row1 = cache_.row(i1);
    const double* row2 = cache_.row(i2);
    const double k11 = row1[i1], k12 = row1[i2], k22 = row2[i2];
    const double eta = k11 + k22 - 2.0 * k12;

    double a2;
    if (eta > 0.0) {
      a2 = alph2 + y2 * (e1 - e2) / eta;
      a2 = std::clamp(a2, lo, hi);
    } else {
      // flat or concave segment: evaluate the objective change at both ends
      double dlo = objective_delta(i1, i2, lo, k11, k12, k22);
      double dhi = objective_delta(i1, i2, hi, k11, k12, k22);
      double eps = 1e-12 * (std::fabs(dlo) + std::fabs(dhi) + 1.0);
      if (dlo > dhi + eps && dlo > 0.0)
        a2 = lo;
      else if (dhi > dlo + eps && dhi > 0.0)
        a2 = hi;
      else
        return false;
    }
    if (std::fabs(a2 - alph2) < 1e-14 * (a2 + alph2 + 1e-14)) return false;

    double a1 = alph1 + s * (alph2 - a2);
    if (a1 < 0.0) a1 = 0.0;
    if (a1 > c) a1 = c;

    const double d1 = y1 * (a1 - alph1);
    const double d2 = y2 * (a2 - alph2);

    const double b1 = b_ - e1 - d1 * k11 - d2 * k12;
    const double b2 = b_ - e2 - d1 * k12 - d2 * k22;
    double b_new;
    if (a1 > 0.0 && a1 < c)
      b_new = b1;
    else if (a2 > 0.0 && a2 < c)
      b_new = b2;
    else
      b_new = 0.5 * (b1 + b2);
    const double db = b_new - b_;

    alpha_[i1] = a1;
    alpha_[i2] = a2;
    b_ = b_new;
    pass_alpha_delta_ += std::fabs(a2 - alph2) + std::fabs(a1 - alph1);

    double* err = errors_.data();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n_); ++k) {
      auto ku = static_cast<std::size_t>(k);
      err[ku] += d1 * row1[ku] + d2 * row2[ku] + db;
    }
    return true;
  }

  // Objective gain of moving alpha2 to a2cand along the constraint line.
  double objective_delta(std::size_t i1, std::size_t i2, double a2cand,
                         double k11, double k12, double k22) const {
    const double alph1 = alpha_[i1], alph2 = alpha_[i2];
    const double y1 = data_.y[i1], y2 = data_.y[i2];
    const double s = y1 * y2;
    const double a1cand = alph1 + s * (alph2 - a2cand);
    const double g1 = errors_[i1] + y1 - b_;
    const double g2 = errors_[i2] + y2 - b_;
    const double v1 = g1 - y1 * alph1 * k11 - y2 * alph2 * k12;
    const double v2 = g2 - y1 * alph1 * k12 - y2 * alph2 * k22;
    const double d1 = a1cand - alph1;
    const double d2 = a2cand - alph2;
    return d1 + d2 -
           0.5 * k11 * (a1cand * a1cand - alph1 * alph1) -
           0.5 * k22 * (a2cand * a2cand - alph2 * alph2) -
           s * k12 * (a1cand * a2cand - alph1 * alph2) -
           y1 * d1 * v1 - y2 * d2 * v2;
  }

  const TrainingSet& data_;
  const SvmHyperParams& hyper_;
  std::size_t n_;
  KernelCache cache_;
  Rng rng_;
  std::vector<double> alpha_;
  std::vector<double> errors_;  // E_i = f(x_i) - y_i
  std::vector<std::size_t> scan_order_;
  double b_ = 0.0;
  double bias_final_ = 0.0;
  double pass_alpha_delta_ = 0.0;
  int full_passes_ = 0;
};

}  // namespace

SvmModel train_smo(const TrainingSet& data, const SvmHyperParams& hyper,
                   TrainDiagnostics* diag) {
  const std::size_t n = data.x.size();
  if (n == 0 || data.y.size() != n)
    throw EmptyInput("training set empty or labels mismatched");
  bool has_pos = false, has_neg = false;
  for (int y : data.y) {
    if (y == 1) has_pos = true;
    else if (y == -1) has_neg = true;
    else throw DegenerateLabels("labels must be +1/-1");
  }
  if (!has_pos || !has_neg)
    throw DegenerateLabels("training set contains a single class");
  for (const auto& v : data.x)
    if (v.dim != data.x[0].dim)
      throw DimensionMismatch("inconsistent vector dimensions");
  if (hyper.reg_c <= 0.0 || hyper.gamma <= 0.0 || hyper.degree < 1 ||
      hyper.coef0 < 0.0 || hyper.tol <= 0.0 || hyper.max_passes < 1)
    throw ConfigError("invalid SVM hyperparameters");

  SmoSolver solver(data, hyper);
  solver.solve();
  solver.finalize_bias();

  if (diag) {
    diag->alpha = solver.alpha();
    diag->dual_objective = solver.dual_objective();
    diag->passes = solver.passes();
    diag->kernel_rows_computed = solver.rows_computed();
  }

  SvmModel model;
  model.hyper = hyper;
  model.bias = solver.bias();
  for (std::size_t i = 0; i < n; ++i) {
    if (solver.alpha()[i] > 0.0) {
      model.support_vectors.push_back(data.x[i]);
      model.dual_coefs.push_back(solver.alpha()[i] * data.y[i]);
    }
  }
  if (!std::isfinite(model.bias)) throw NonFinite("bias");
  return model;
}

double decision(const SvmModel& model, const SparseVector& x) {
  double f = model.bias;
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i)
    f += model.dual_coefs[i] * poly_kernel(model.support_vectors[i], x, model.hyper);
  return f;
}

int predict(const SvmModel& model, const SparseVector& x) {
  return decision(model, x) >= 0.0 ? 1 : -1;
}

std::vector<double> decision_batch(const SvmModel& model,
                                   const std::vector<SparseVector>& xs) {
  std::vector<double> out(xs.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(xs.size()); ++i)
    out[static_cast<std::size_t>(i)] =
        decision(model, xs[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<int> predict_batch(const SvmModel& model,
                               const std::vector<SparseVector>& xs) {
  std::vector<double> f = decision_batch(model, xs);
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] >= 0.0 ? 1 : -1;
  return out;
}

std::vector<double> kernel_row(const TrainingSet& data,
                               const SvmHyperParams& hyper, std::size_t i) {
  std::vector<double> row(data.x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(data.x.size()); ++k)
    row[static_cast<std::size_t>(k)] =
        poly_kernel(data.x[i], data.x[static_cast<std::size_t>(k)], hyper);
  return row;
}

namespace {

std::string fmt_hex(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

}  // namespace

void save_model(const SvmModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << "edasvm-model v1\n";
  out << "reg_c " << fmt_hex(model.hyper.reg_c) << "\n";
  out << "gamma " << fmt_hex(model.hyper.gamma) << "\n";
  out << "degree " << model.hyper.degree << "\n";
  out << "coef0 " << fmt_hex(model.hyper.coef0) << "\n";
  out << "seed " << model.hyper.seed << "\n";
  out << "tol " << fmt_hex(model.hyper.tol) << "\n";
  out << "max_passes " << model.hyper.max_passes << "\n";
  out << "bias " << fmt_hex(model.bias) << "\n";
  out << "dataset_hash " << (model.dataset_hash.empty() ? "-" : model.dataset_hash) << "\n";
  out << "lexicon_hash " << (model.lexicon_hash.empty() ? "-" : model.lexicon_hash) << "\n";
  out << "has_tfidf " << (model.has_tfidf ? 1 : 0) << "\n";
  if (model.has_tfidf) {
    out << "tfidf_hash " << model.tfidf.vocab_hash() << "\n";
    model.tfidf.save(out);
  }
  std::uint32_t dim = model.support_vectors.empty() ? 0 : model.support_vectors[0].dim;
  out << "support_vectors " << model.support_vectors.size() << " " << dim << "\n";
  for (std::size_t i = 0; i < model.support_vectors.size(); ++i) {
    out << fmt_hex(model.dual_coefs[i]);
    for (const auto& [idx, val] : model.support_vectors[i].entries)
      out << " " << idx << ":" << fmt_hex(val);
    out << "\n";
  }
  out << "end\n";
}

SvmModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw CorruptFile("empty model file");
  if (line != "edasvm-model v1") throw SchemaMismatch("bad model header");

  SvmModel model;
  auto read_kv = [&](const char* key) -> std::string {
    if (!std::getline(in, line)) throw CorruptFile("truncated model file");
    std::istringstream ss(line);
    std::string k, v;
    ss >> k >> v;
    if (k != key) throw SchemaMismatch("expected " + std::string(key));
    return v;
  };
  model.hyper.reg_c = std::strtod(read_kv("reg_c").c_str(), nullptr);
  model.hyper.gamma = std::strtod(read_kv("gamma").c_str(), nullptr);
  model.hyper.degree = std::stoi(read_kv("degree"));
  model.hyper.coef0 = std::strtod(read_kv("coef0").c_str(), nullptr);
  model.hyper.seed = std::stoull(read_kv("seed"));
  model.hyper.tol = std::strtod(read_kv("tol").c_str(), nullptr);
  model.hyper.max_passes = std::stoi(read_kv("max_passes"));
  model.bias = std::strtod(read_kv("bias").c_str(), nullptr);
  model.dataset_hash = read_kv("dataset_hash");
  if (model.dataset_hash == "-") model.dataset_hash.clear();
  model.lexicon_hash = read_kv("lexicon_hash");
  if (model.lexicon_hash == "-") model.lexicon_hash.clear();
  model.has_tfidf = read_kv("has_tfidf") == "1";
  if (model.has_tfidf) {
    std::string stored_hash = read_kv("tfidf_hash");
    model.tfidf = TfIdfModel::load(in);
    if (model.tfidf.vocab_hash() != stored_hash)
      throw SchemaMismatch("vocabulary hash differs from the stored one");
  }

  if (!std::getline(in, line)) throw CorruptFile("truncated model file");
  std::size_t n_sv = 0;
  std::uint32_t dim = 0;
  {
    std::istringstream ss(line);
    std::string k;
    ss >> k >> n_sv >> dim;
    if (k != "support_vectors") throw SchemaMismatch("expected support_vectors");
  }
  for (std::size_t i = 0; i < n_sv; ++i) {
    if (!std::getline(in, line)) throw CorruptFile("truncated support vectors");
    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    model.dual_coefs.push_back(std::strtod(tok.c_str(), nullptr));
    SparseVector v;
    v.dim = dim;
    while (ss >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) throw CorruptFile("bad sparse entry");
      v.entries.emplace_back(
          static_cast<std::uint32_t>(std::stoul(tok.substr(0, colon))),
          std::strtod(tok.c_str() + colon + 1, nullptr));
    }
    model.support_vectors.push_back(std::move(v));
  }
  if (!std::getline(in, line) || line != "end")
    throw CorruptFile("missing end marker");
  return model;
}

}  // namespace edasvm
