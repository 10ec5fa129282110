#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "edasvm/csv.hpp"
#include "edasvm/errors.hpp"
#include "edasvm/harness.hpp"

namespace edasvm {

namespace {

// Published reference results this harness tries to reproduce. The prior
// study's figures are included for the comparison table.
struct ReferenceResults {
  double prior_accuracy = 0.90;
  double prior_precision = 0.9444;
  double prior_recall = 0.85;
  double prior_f1 = 0.8947;
  double baseline_accuracy = 0.90;
  double baseline_kfold = 0.872;
  double augmented_accuracy = 0.925;
  double augmented_kfold = 0.8974;
  int best_n_aug = 16;
  double best_alpha = 0.1;
};

constexpr ReferenceResults kReference{};

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string fmt_pct(double v) { return fmt(100.0 * v, 2) + "%"; }

std::string provenance_comment(const Provenance& p) {
  std::string out;
  out += "# config_sha256 " + p.config_sha256 + "\n";
  out += "# dataset_sha256 " + p.dataset_sha256 + "\n";
  out += "# stopwords_sha256 " + p.stopword_sha256 + "\n";
  out += "# normalization_sha256 " + p.normalization_sha256 + "\n";
  out += "# roots_sha256 " + p.root_sha256 + "\n";
  out += "# thesaurus_sha256 " + p.thesaurus_sha256 + "\n";
  out += "# seed " + std::to_string(p.seed) + "\n";
  return out;
}

std::string provenance_md(const Provenance& p) {
  std::string out;
  out += "\n---\n\n";
  out += "- config sha256: `" + p.config_sha256 + "`\n";
  out += "- dataset sha256: `" + p.dataset_sha256 + "`\n";
  out += "- stopwords sha256: `" + p.stopword_sha256 + "`\n";
  out += "- normalization sha256: `" + p.normalization_sha256 + "`\n";
  out += "- roots sha256: `" + p.root_sha256 + "`\n";
  out += "- thesaurus sha256: `" + p.thesaurus_sha256 + "`\n";
  out += "- seed: " + std::to_string(p.seed) + "\n";
  return out;
}

std::string scenario_csv_row(const ScenarioResult& r) {
  std::string folds;
  for (std::size_t i = 0; i < r.per_fold.size(); ++i) {
    if (i) folds += ';';
    folds += fmt(r.per_fold[i], 6);
  }
  return csv_row({std::to_string(r.n_aug), fmt(r.alpha, 4),
                  fmt(r.mean_kfold, 6), fmt(r.test.accuracy, 6),
                  fmt(r.test.precision, 6), fmt(r.test.recall, 6),
                  fmt(r.test.f1, 6), folds});
}

}  // namespace

std::string render_sweep_csv(const SweepReport& report) {
  std::string out = provenance_comment(report.provenance);
  out += csv_row({"n_aug", "alpha", "mean_kfold", "test_accuracy",
                  "test_precision", "test_recall", "test_f1", "folds"});
  out += scenario_csv_row(report.baseline);
  for (const auto& s : report.scenarios) out += scenario_csv_row(s);
  return out;
}

std::string render_sweep_md(const SweepReport& report) {
  std::string out = "# Augmentation sweep\n\n";
  out += "Baseline (no augmentation): " + std::to_string(report.cv_k) +
         "-fold " + fmt_pct(report.baseline.mean_kfold) + ", test accuracy " +
         fmt_pct(report.baseline.test.accuracy) + ".\n\n";
  out += "| n_aug | alpha | " + std::to_string(report.cv_k) +
         "-fold | accuracy |\n";
  out += "|---:|---:|---:|---:|\n";
  for (std::size_t i = 0; i < report.scenarios.size(); ++i) {
    const auto& s = report.scenarios[i];
    bool best = i == report.best_index;
    std::string mark = best ? "**" : "";
    out += "| " + std::to_string(s.n_aug) + " | " + fmt(s.alpha, 2) + " | " +
           mark + fmt_pct(s.mean_kfold) + mark + " | " +
           fmt_pct(s.test.accuracy) + " |\n";
  }
  if (!report.scenarios.empty()) {
    const auto& b = report.scenarios[report.best_index];
    out += "\nBest cell: n_aug=" + std::to_string(b.n_aug) + ", alpha=" +
           fmt(b.alpha, 2) + " with " + std::to_string(report.cv_k) +
           "-fold " + fmt_pct(b.mean_kfold) + " (" +
           (b.mean_kfold >= report.baseline.mean_kfold ? "+" : "") +
           fmt(100.0 * (b.mean_kfold - report.baseline.mean_kfold), 2) +
           " points vs baseline).\n";
  }
  out += provenance_md(report.provenance);
  return out;
}

std::string render_comparison_md(const SweepReport& report) {
  const auto& best = report.scenarios.empty() ? report.baseline
                                              : report.scenarios[report.best_index];
  std::string out = "# Comparison with published results\n\n";
  out += "| Model | Accuracy | Precision | Recall | F1 Score | " +
         std::to_string(report.cv_k) + "-fold |\n";
  out += "|---|---:|---:|---:|---:|---:|\n";
  out += "| Prior SVM study (published) | " + fmt_pct(kReference.prior_accuracy) +
         " | " + fmt_pct(kReference.prior_precision) + " | " +
         fmt_pct(kReference.prior_recall) + " | " + fmt_pct(kReference.prior_f1) +
         " | - |\n";
  out += "| SVM only (this run) | " + fmt_pct(report.baseline.test.accuracy) +
         " | " + fmt_pct(report.baseline.test.precision) + " | " +
         fmt_pct(report.baseline.test.recall) + " | " +
         fmt_pct(report.baseline.test.f1) + " | " +
         fmt_pct(report.baseline.mean_kfold) + " |\n";
  out += "| SVM + EDA (this run, best cell) | " + fmt_pct(best.test.accuracy) +
         " | " + fmt_pct(best.test.precision) + " | " + fmt_pct(best.test.recall) +
         " | " + fmt_pct(best.test.f1) + " | " + fmt_pct(best.mean_kfold) +
         " |\n";
  out += provenance_md(report.provenance);
  return out;
}

std::string render_deviation_md(const SweepReport& report) {
  const auto& best = report.scenarios.empty() ? report.baseline
                                              : report.scenarios[report.best_index];
  auto row = [](const std::string& name, double ref, double got) {
    return "| " + name + " | " + fmt_pct(ref) + " | " + fmt_pct(got) + " | " +
           (got >= ref ? "+" : "") + fmt(100.0 * (got - ref), 2) + " |\n";
  };
  std::string out = "# Deviation report\n\n";
  out += "Published reference values versus this run.\n\n";
  out += "| quantity | reference | this run | delta (points) |\n";
  out += "|---|---:|---:|---:|\n";
  out += row("baseline accuracy", kReference.baseline_accuracy,
             report.baseline.test.accuracy);
  out += row("baseline " + std::to_string(report.cv_k) + "-fold",
             kReference.baseline_kfold, report.baseline.mean_kfold);
  out += row("best augmented " + std::to_string(report.cv_k) + "-fold",
             kReference.augmented_kfold, best.mean_kfold);
  out += row("best augmented accuracy", kReference.augmented_accuracy,
             best.test.accuracy);
  out += "\nReference best cell: n_aug=" + std::to_string(kReference.best_n_aug) +
         ", alpha=" + fmt(kReference.best_alpha, 2) + ". This run: n_aug=" +
         std::to_string(best.n_aug) + ", alpha=" + fmt(best.alpha, 2) + ".\n";
  out += "\nThe bundled corpus, stopword list, normalization dictionary, root"
         " dictionary and thesaurus are re-creations; the originals behind the"
         " published numbers are third-party and not redistributed here, so"
         " cell-level agreement is best-effort rather than exact.\n";
  out += provenance_md(report.provenance);
  return out;
}

std::string render_ablation_csv(const AblationReport& report) {
  std::string out = provenance_comment(report.provenance);
  out += csv_row({"op", "n_aug", "alpha", "mean_kfold", "test_accuracy"});
  out += csv_row({"none", "0", fmt(0.0, 4), fmt(report.baseline.mean_kfold, 6),
                  fmt(report.baseline.test.accuracy, 6)});
  for (const auto& series : report.series)
    for (const auto& p : series.points)
      out += csv_row({eda_op_name(series.op), std::to_string(p.n_aug),
                      fmt(p.alpha, 4), fmt(p.mean_kfold, 6),
                      fmt(p.test.accuracy, 6)});
  return out;
}

std::string render_ablation_svg(const AblationReport& report) {
  const double width = 860, height = 520;
  const double x0 = 90, x1 = 800, y0 = 440, y1 = 60;

  double amin = 1e9, amax = -1e9, smin = 1e9, smax = -1e9;
  for (const auto& series : report.series) {
    for (const auto& p : series.points) {
      amin = std::min(amin, p.alpha);
      amax = std::max(amax, p.alpha);
      smin = std::min(smin, p.mean_kfold);
      smax = std::max(smax, p.mean_kfold);
    }
  }
  smin = std::min(smin, report.baseline.mean_kfold);
  smax = std::max(smax, report.baseline.mean_kfold);
  if (amax <= amin) amax = amin + 1.0;
  smin = std::max(0.0, std::floor(smin * 50.0) / 50.0 - 0.02);
  smax = std::min(1.0, std::ceil(smax * 50.0) / 50.0 + 0.02);
  if (smax <= smin) smax = smin + 0.02;

  auto px = [&](double a) {
    return x0 + (a - amin) / (amax - amin) * (x1 - x0);
  };
  auto py = [&](double s) {
    return y0 - (s - smin) / (smax - smin) * (y0 - y1);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         fmt(width, 0) + " " + fmt(height, 0) + "\">\n";
  svg += "<rect width=\"" + fmt(width, 0) + "\" height=\"" + fmt(height, 0) +
         "\" fill=\"white\"/>\n";
  svg += "<text x=\"430\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\""
         " font-size=\"18\">k-fold score per EDA operation (n_aug=" +
         std::to_string(report.n_aug) + ")</text>\n";

  // axes
  svg += "<line x1=\"" + fmt(x0, 1) + "\" y1=\"" + fmt(y0, 1) + "\" x2=\"" +
         fmt(x1, 1) + "\" y2=\"" + fmt(y0, 1) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(x0, 1) + "\" y1=\"" + fmt(y0, 1) + "\" x2=\"" +
         fmt(x0, 1) + "\" y2=\"" + fmt(y1, 1) + "\" stroke=\"black\"/>\n";

  for (int t = 0; t <= 5; ++t) {
    double s = smin + (smax - smin) * t / 5.0;
    double y = py(s);
    svg += "<line x1=\"" + fmt(x0 - 5, 1) + "\" y1=\"" + fmt(y, 1) + "\" x2=\"" +
           fmt(x0, 1) + "\" y2=\"" + fmt(y, 1) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(x0 - 10, 1) + "\" y=\"" + fmt(y + 4, 1) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           fmt(s, 3) + "</text>\n";
    svg += "<line x1=\"" + fmt(x0, 1) + "\" y1=\"" + fmt(y, 1) + "\" x2=\"" +
           fmt(x1, 1) + "\" y2=\"" + fmt(y, 1) +
           "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
  }
  for (const auto& series : report.series) {
    for (const auto& p : series.points) {
      double x = px(p.alpha);
      svg += "<line x1=\"" + fmt(x, 1) + "\" y1=\"" + fmt(y0, 1) + "\" x2=\"" +
             fmt(x, 1) + "\" y2=\"" + fmt(y0 + 5, 1) + "\" stroke=\"black\"/>\n";
      svg += "<text x=\"" + fmt(x, 1) + "\" y=\"" + fmt(y0 + 20, 1) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\""
             " font-size=\"12\">" + fmt(p.alpha, 2) + "</text>\n";
    }
    break;  // tick labels once; all series share the alpha axis
  }
  svg += "<text x=\"445\" y=\"480\" text-anchor=\"middle\" font-family=\"sans-serif\""
         " font-size=\"14\">alpha</text>\n";
  svg += "<text x=\"28\" y=\"250\" text-anchor=\"middle\" font-family=\"sans-serif\""
         " font-size=\"14\" transform=\"rotate(-90 28 250)\">mean k-fold score</text>\n";

  // baseline reference
  {
    double y = py(report.baseline.mean_kfold);
    svg += "<line x1=\"" + fmt(x0, 1) + "\" y1=\"" + fmt(y, 1) + "\" x2=\"" +
           fmt(x1, 1) + "\" y2=\"" + fmt(y, 1) +
           "\" stroke=\"#555555\" stroke-dasharray=\"6,4\"/>\n";
    svg += "<text x=\"" + fmt(x1 - 4, 1) + "\" y=\"" + fmt(y - 6, 1) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\""
           " fill=\"#555555\">baseline " + fmt(report.baseline.mean_kfold, 4) +
           "</text>\n";
  }

  const char* colors[4] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728"};
  for (std::size_t si = 0; si < report.series.size(); ++si) {
    const auto& series = report.series[si];
    const char* color = colors[si % 4];
    std::string points;
    for (const auto& p : series.points) {
      if (!points.empty()) points += " ";
      points += fmt(px(p.alpha), 1) + "," + fmt(py(p.mean_kfold), 1);
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
    for (const auto& p : series.points)
      svg += "<circle cx=\"" + fmt(px(p.alpha), 1) + "\" cy=\"" +
             fmt(py(p.mean_kfold), 1) + "\" r=\"3.5\" fill=\"" + color + "\"/>\n";
    // legend
    double ly = 70 + 22 * static_cast<double>(si);
    svg += "<line x1=\"700\" y1=\"" + fmt(ly - 4, 1) + "\" x2=\"730\" y2=\"" +
           fmt(ly - 4, 1) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    std::string opname = eda_op_name(series.op);
    for (char& ch : opname) ch = static_cast<char>(std::toupper(ch));
    svg += "<text x=\"738\" y=\"" + fmt(ly, 1) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + opname +
           "</text>\n";
  }

  svg += "<text x=\"8\" y=\"510\" font-family=\"sans-serif\" font-size=\"9\""
         " fill=\"#888888\">config " +
         report.provenance.config_sha256.substr(0, 16) + " seed " +
         std::to_string(report.provenance.seed) + "</text>\n";
  svg += "</svg>\n";
  return svg;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << content;
}

namespace {

bool wants(const ExperimentConfig& cfg, const std::string& format) {
  return std::find(cfg.formats.begin(), cfg.formats.end(), format) !=
         cfg.formats.end();
}

}  // namespace

void write_sweep_outputs(const SweepReport& report, const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  auto path = [&](const char* name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
  };
  if (wants(cfg, "csv")) write_text_file(path("sweep.csv"), render_sweep_csv(report));
  if (wants(cfg, "md")) {
    write_text_file(path("sweep.md"), render_sweep_md(report));
    write_text_file(path("comparison.md"), render_comparison_md(report));
    write_text_file(path("deviation.md"), render_deviation_md(report));
  }
}

void write_ablation_outputs(const AblationReport& report,
                            const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.out_dir);
  auto path = [&](const char* name) {
    return (std::filesystem::path(cfg.out_dir) / name).string();
  };
  if (wants(cfg, "csv"))
    write_text_file(path("ablation.csv"), render_ablation_csv(report));
  if (wants(cfg, "svg"))
    write_text_file(path("ablation.svg"), render_ablation_svg(report));
}

}  // namespace edasvm
