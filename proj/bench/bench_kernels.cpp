// Throughput comparison: serial reference kernels vs the OpenMP versions.
// Verifies agreement bitwise while timing.

#include <omp.h>

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "edasvm/reference.hpp"
#include "edasvm/rng.hpp"
#include "edasvm/svm.hpp"
#include "edasvm/tfidf.hpp"

using namespace edasvm;

namespace {

TokenDocs make_docs(Rng& rng, int n, int vocab, int len) {
  std::vector<std::string> pool;
  for (int i = 0; i < vocab; ++i) pool.push_back("w" + std::to_string(i));
  TokenDocs docs;
  for (int i = 0; i < n; ++i) {
    TokenDoc d;
    d.source_id = i;
    d.label = i % 2 ? Label::Negative : Label::Positive;
    for (int k = 0; k < len; ++k) d.tokens.push_back(pool[rng.below(pool.size())]);
    docs.push_back(d);
  }
  return docs;
}

struct Timing {
  double serial;
  double parallel;
  bool identical;
};

void print_row(const char* name, const Timing& t) {
  std::printf("%-22s serial %8.3f ms   omp %8.3f ms   speedup %4.2fx   %s\n",
              name, 1e3 * t.serial, 1e3 * t.parallel, t.serial / t.parallel,
              t.identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int n_docs = 2000;
  int repeats = 5;
  for (int i = 1; i + 1 < argc; i += 2) {
    if (!std::strcmp(argv[i], "--docs")) n_docs = std::atoi(argv[i + 1]);
    if (!std::strcmp(argv[i], "--repeats")) repeats = std::atoi(argv[i + 1]);
  }
  std::printf("docs=%d repeats=%d threads=%d\n", n_docs, repeats,
              omp_get_max_threads());

  Rng rng(99);
  TokenDocs docs = make_docs(rng, n_docs, 800, 18);
  TfIdfModel model = TfIdfModel::fit(docs);

  // --- batch transform ---
  Timing t_transform{};
  std::vector<SparseVector> xs;
  {
    double best_s = 1e30, best_p = 1e30;
    std::vector<SparseVector> a, b;
    for (int r = 0; r < repeats; ++r) {
      double t0 = omp_get_wtime();
      a = reference::transform_batch_serial(model, docs);
      best_s = std::min(best_s, omp_get_wtime() - t0);
      t0 = omp_get_wtime();
      b = model.transform_batch(docs);
      best_p = std::min(best_p, omp_get_wtime() - t0);
    }
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
      same = a[i].entries == b[i].entries;
    t_transform = {best_s, best_p, same};
    xs = std::move(b);
  }
  print_row("tfidf transform", t_transform);

  SvmHyperParams hyper;
  hyper.reg_c = 1e-4;
  hyper.gamma = 100.0;
  hyper.degree = 2;
  TrainingSet ts;
  ts.x = xs;
  for (const auto& d : docs) ts.y.push_back(label_value(d.label));

  // --- kernel rows ---
  {
    double best_s = 1e30, best_p = 1e30;
    bool same = true;
    for (int r = 0; r < repeats; ++r) {
      for (std::size_t i : {std::size_t(0), std::size_t(ts.x.size() / 2)}) {
        double t0 = omp_get_wtime();
        auto a = reference::kernel_row_serial(ts, hyper, i);
        best_s = std::min(best_s, omp_get_wtime() - t0);
        t0 = omp_get_wtime();
        auto b = kernel_row(ts, hyper, i);
        best_p = std::min(best_p, omp_get_wtime() - t0);
        same = same && a == b;
      }
    }
    print_row("gram row", {best_s, best_p, same});
  }

  // --- full training + batch decision ---
  {
    double t0 = omp_get_wtime();
    SvmModel model_svm = train_smo(ts, hyper);
    double train_time = omp_get_wtime() - t0;
    std::printf("%-22s %zu support vectors in %.2f s\n", "smo training",
                model_svm.support_vectors.size(), train_time);

    double best_s = 1e30, best_p = 1e30;
    std::vector<double> a, b;
    for (int r = 0; r < repeats; ++r) {
      t0 = omp_get_wtime();
      a = reference::decision_batch_serial(model_svm, ts.x);
      best_s = std::min(best_s, omp_get_wtime() - t0);
      t0 = omp_get_wtime();
      b = decision_batch(model_svm, ts.x);
      best_p = std::min(best_p, omp_get_wtime() - t0);
    }
    print_row("decision batch", {best_s, best_p, a == b});
  }
  return 0;
}
