#include "edasvm/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "edasvm/errors.hpp"

namespace edasvm::reference {

std::vector<double> kernel_row_serial(const TrainingSet& data,
                                      const SvmHyperParams& hyper,
                                      std::size_t i) {
  std::vector<double> row(data.x.size());
  for (std::size_t k = 0; k < data.x.size(); ++k)
    row[k] = poly_kernel(data.x[i], data.x[k], hyper);
  return row;
}

std::vector<SparseVector> transform_batch_serial(const TfIdfModel& model,
                                                 const TokenDocs& docs) {
  std::vector<SparseVector> out(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i)
    out[i] = model.transform(docs[i].tokens);
  return out;
}

std::vector<double> decision_batch_serial(const SvmModel& model,
                                          const std::vector<SparseVector>& xs) {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = decision(model, xs[i]);
  return out;
}

double dual_objective(const TrainingSet& data, const SvmHyperParams& hyper,
                      const std::vector<double>& alpha) {
  const std::size_t n = data.x.size();
  double obj = 0.0;
  for (std::size_t i = 0; i < n; ++i) obj += alpha[i];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      obj -= 0.5 * alpha[i] * alpha[j] * data.y[i] * data.y[j] *
             poly_kernel(data.x[i], data.x[j], hyper);
    }
  }
  return obj;
}

double decision_value(const TrainingSet& data, const SvmHyperParams& hyper,
                      const std::vector<double>& alpha, double bias,
                      const SparseVector& x) {
  double f = bias;
  for (std::size_t i = 0; i < data.x.size(); ++i)
    f += alpha[i] * data.y[i] * poly_kernel(data.x[i], x, hyper);
  return f;
}

namespace {

// Partial-pivot Gauss. Returns false when the system is singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> rhs,
                  std::vector<double>& out) {
  const std::size_t m = a.size();
  double max_abs = 0.0;
  for (const auto& row : a)
    for (double v : row) max_abs = std::max(max_abs, std::fabs(v));
  if (max_abs == 0.0) return false;
  const double pivot_eps = 1e-13 * max_abs;

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (std::fabs(a[piv][col]) < pivot_eps) return false;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < m; ++r) {
      double factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] -= factor * a[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  out.assign(m, 0.0);
  for (std::size_t r = m; r-- > 0;) {
    double v = rhs[r];
    for (std::size_t c = r + 1; c < m; ++c) v -= a[r][c] * out[c];
    out[r] = v / a[r][r];
  }
  return true;
}

struct Candidate {
  std::vector<double> alpha;
  double bias;
  double objective;
};

// Exhaustive pairwise exact ascent; used only when every active-set system
// is singular.
Candidate pairwise_ascent(const TrainingSet& data, const SvmHyperParams& hyper,
                          const std::vector<std::vector<double>>& kmat) {
  const std::size_t n = data.x.size();
  const double c = hyper.reg_c;
  std::vector<double> alpha(n, 0.0);

  auto gval = [&](std::size_t k) {
    double g = 0.0;
    for (std::size_t l = 0; l < n; ++l)
      g += alpha[l] * data.y[l] * kmat[k][l];
    return g;
  };
  auto objective = [&] {
    double o = 0.0;
    for (std::size_t p = 0; p < n; ++p) o += alpha[p];
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        o -= 0.5 * alpha[p] * alpha[q] * data.y[p] * data.y[q] * kmat[p][q];
    return o;
  };

  for (int sweep = 0; sweep < 200000; ++sweep) {
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double s = data.y[i] * data.y[j];
        double lo, hi;
        if (s < 0) {
          lo = std::max(0.0, alpha[j] - alpha[i]);
          hi = std::min(c, c + alpha[j] - alpha[i]);
        } else {
          lo = std::max(0.0, alpha[i] + alpha[j] - c);
          hi = std::min(c, alpha[i] + alpha[j]);
        }
        if (lo >= hi) continue;
        double eta = kmat[i][i] + kmat[j][j] - 2.0 * kmat[i][j];
        double aj;
        if (eta > 0.0) {
          double ei = gval(i) - data.y[i];
          double ej = gval(j) - data.y[j];
          aj = std::clamp(alpha[j] + data.y[j] * (ei - ej) / eta, lo, hi);
        } else {
          double save_j = alpha[j], save_i = alpha[i];
          auto eval_at = [&](double cand) {
            alpha[j] = cand;
            alpha[i] = std::clamp(save_i + s * (save_j - cand), 0.0, c);
            return objective();
          };
          double obj_lo = eval_at(lo);
          double obj_hi = eval_at(hi);
          alpha[j] = save_j;
          alpha[i] = save_i;
          aj = obj_lo >= obj_hi ? lo : hi;
        }
        double ai = std::clamp(alpha[i] + s * (alpha[j] - aj), 0.0, c);
        moved += std::fabs(aj - alpha[j]);
        alpha[j] = aj;
        alpha[i] = ai;
      }
    }
    if (moved < 1e-15 * (1.0 + c)) break;
  }

  Candidate cand;
  cand.alpha = alpha;
  cand.objective = dual_objective(data, hyper, alpha);

  // bias by the same free-average / midpoint rule as the trainer
  double sum_free = 0.0;
  std::size_t n_free = 0;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double g = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      g += alpha[j] * data.y[j] * kmat[i][j];
    double candb = data.y[i] - g;
    bool free = alpha[i] > 1e-12 * c && alpha[i] < c * (1.0 - 1e-12);
    if (free) {
      sum_free += candb;
      ++n_free;
    } else if ((alpha[i] <= 1e-12 * c && data.y[i] > 0) ||
               (alpha[i] >= c * (1.0 - 1e-12) && data.y[i] < 0)) {
      lo = std::max(lo, candb);
    } else {
      hi = std::min(hi, candb);
    }
  }
  if (n_free > 0)
    cand.bias = sum_free / static_cast<double>(n_free);
  else if (std::isfinite(lo) && std::isfinite(hi))
    cand.bias = 0.5 * (lo + hi);
  else if (std::isfinite(lo))
    cand.bias = lo;
  else
    cand.bias = std::isfinite(hi) ? hi : 0.0;
  return cand;
}

}  // namespace

DualSolution solve_dual(const TrainingSet& data, const SvmHyperParams& hyper) {
  const std::size_t n = data.x.size();
  if (n == 0 || n > 8)
    throw DomainError("reference solver handles 1..8 points");
  bool has_pos = false, has_neg = false;
  for (int y : data.y) (y > 0 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg)
    throw DegenerateLabels("reference solver needs both classes");

  const double c = hyper.reg_c;
  std::vector<std::vector<double>> kmat(n, std::vector<double>(n));
  double kmax = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      kmat[i][j] = poly_kernel(data.x[i], data.x[j], hyper);
      kmax = std::max(kmax, std::fabs(kmat[i][j]));
    }

  // tolerances scaled to the magnitudes f-values can reach
  const double fscale = std::max(1.0, kmax * c * static_cast<double>(n));
  const double kkt_eps = 1e-12 * fscale + 1e-9;
  const double box_eps = 1e-12 * c + 1e-15;
  const double eq_eps = 1e-12 * c * static_cast<double>(n) + 1e-15;

  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= 3;

  bool found = false;
  Candidate best{};

  for (std::size_t code = 0; code < combos; ++code) {
    // digit per point: 0 = at zero, 1 = at C, 2 = free
    std::vector<int> state(n);
    std::size_t rem = code;
    for (std::size_t i = 0; i < n; ++i) {
      state[i] = static_cast<int>(rem % 3);
      rem /= 3;
    }

    std::vector<std::size_t> free_idx;
    std::vector<double> alpha(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (state[i] == 1) alpha[i] = c;
      if (state[i] == 2) free_idx.push_back(i);
    }

    double bias;
    if (!free_idx.empty()) {
      const std::size_t m = free_idx.size();
      std::vector<std::vector<double>> a(m + 1, std::vector<double>(m + 1, 0.0));
      std::vector<double> rhs(m + 1, 0.0);
      for (std::size_t r = 0; r < m; ++r) {
        std::size_t i = free_idx[r];
        for (std::size_t cidx = 0; cidx < m; ++cidx) {
          std::size_t j = free_idx[cidx];
          a[r][cidx] = data.y[j] * kmat[i][j];
        }
        a[r][m] = 1.0;
        double fixed = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          if (state[j] == 1) fixed += c * data.y[j] * kmat[i][j];
        rhs[r] = data.y[i] - fixed;
      }
      double fixed_y = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (state[j] == 1) fixed_y += c * data.y[j];
      for (std::size_t cidx = 0; cidx < m; ++cidx)
        a[m][cidx] = data.y[free_idx[cidx]];
      a[m][m] = 0.0;
      rhs[m] = -fixed_y;

      std::vector<double> sol;
      if (!solve_linear(a, rhs, sol)) continue;
      bool in_box = true;
      for (std::size_t r = 0; r < m; ++r) {
        if (sol[r] < -box_eps || sol[r] > c + box_eps) {
          in_box = false;
          break;
        }
        alpha[free_idx[r]] = std::clamp(sol[r], 0.0, c);
      }
      if (!in_box) continue;
      bias = sol[m];
    } else {
      double sum_y = 0.0;
      for (std::size_t j = 0; j < n; ++j) sum_y += alpha[j] * data.y[j];
      if (std::fabs(sum_y) > eq_eps) continue;
      double lo = -std::numeric_limits<double>::infinity();
      double hi = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        double g = 0.0;
        for (std::size_t j = 0; j < n; ++j)
          g += alpha[j] * data.y[j] * kmat[i][j];
        double candb = data.y[i] - g;
        if ((state[i] == 0 && data.y[i] > 0) || (state[i] == 1 && data.y[i] < 0))
          lo = std::max(lo, candb);
        else
          hi = std::min(hi, candb);
      }
      if (lo > hi + kkt_eps) continue;
      if (std::isfinite(lo) && std::isfinite(hi))
        bias = 0.5 * (lo + hi);
      else if (std::isfinite(lo))
        bias = lo;
      else if (std::isfinite(hi))
        bias = hi;
      else
        continue;
    }

    // verify the bound points' KKT inequalities
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      double f = bias;
      for (std::size_t j = 0; j < n; ++j)
        f += alpha[j] * data.y[j] * kmat[i][j];
      double margin = data.y[i] * f;
      if (state[i] == 0 && margin < 1.0 - kkt_eps) ok = false;
      if (state[i] == 1 && margin > 1.0 + kkt_eps) ok = false;
      if (state[i] == 2 && std::fabs(margin - 1.0) > kkt_eps) ok = false;
    }
    if (!ok) continue;

    double obj = dual_objective(data, hyper, alpha);
    if (!found || obj > best.objective) {
      best = Candidate{alpha, bias, obj};
      found = true;
    }
  }

  if (!found) best = pairwise_ascent(data, hyper, kmat);

  DualSolution out;
  out.alpha = std::move(best.alpha);
  out.bias = best.bias;
  out.objective = best.objective;
  return out;
}

}  // namespace edasvm::reference
