#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edasvm/augment.hpp"
#include "edasvm/corpus.hpp"
#include "edasvm/lexicons.hpp"
#include "edasvm/metrics.hpp"
#include "edasvm/preprocess.hpp"
#include "edasvm/svm.hpp"

namespace edasvm {

struct ExperimentConfig {
  std::string dataset_path;
  std::string text_column = "Instagram Comment Text";
  std::string label_column = "Sentiment";
  LabelMap label_map{{"positive", 1}, {"negative", -1}};

  std::string stopword_path;
  std::string normalization_path;
  std::string root_path;
  std::string thesaurus_path;

  PreprocessConfig preprocess;
  SplitConfig split;
  SvmHyperParams svm;
  bool use_grid = false;  // re-run grid search instead of fixed params
  HyperGrid grid;
  CvConfig cv;

  std::vector<int> n_augs{1, 2, 4, 8, 16, 32};
  std::vector<double> alphas{0.05, 0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<EdaOp> ops{EdaOp::SR, EdaOp::RI, EdaOp::RS, EdaOp::RD};
  int ablation_n_aug = 4;

  // One master seed drives split, trainer, CV shuffles and augmentation.
  std::uint64_t seed = 42;

  std::string out_dir = "results";
  std::vector<std::string> formats{"csv", "md", "svg"};
  int threads = 0;  // 0 = leave the OpenMP default
};

// JSON file; missing keys keep their defaults. Throws ConfigError.
ExperimentConfig load_config(const std::string& path);
// Canonical serialized form of the effective config (sorted keys).
std::string config_canonical_json(const ExperimentConfig& cfg);

struct ScenarioResult {
  int n_aug = 0;
  double alpha = 0.0;
  double mean_kfold = 0.0;
  std::vector<double> per_fold;
  MetricSet test;
  double wall_seconds = 0.0;  // excluded from deterministic artifacts
};

struct Provenance {
  std::string dataset_sha256;
  std::string stopword_sha256;
  std::string normalization_sha256;
  std::string root_sha256;
  std::string thesaurus_sha256;
  std::string config_sha256;
  std::uint64_t seed = 0;
};

struct SweepReport {
  ScenarioResult baseline;
  std::vector<ScenarioResult> scenarios;
  std::size_t best_index = 0;  // lexicographically-first maximum by mean_kfold
  int cv_k = 10;
  Provenance provenance;
};

struct AblationSeries {
  EdaOp op;
  std::vector<ScenarioResult> points;  // one per alpha
};

struct AblationReport {
  ScenarioResult baseline;
  std::vector<AblationSeries> series;
  int n_aug = 0;
  Provenance provenance;
};

// Shared pipeline state: corpus loaded, preprocessed and split once.
struct Pipeline {
  LexiconSet lexicons;
  Corpus train_raw, test_raw;
  TokenDocs train_docs, test_docs;
  std::vector<std::int64_t> dropped_ids;
  Provenance provenance;
  SvmHyperParams hyper;  // after optional grid search
  std::vector<std::string> log_lines;
};

Pipeline prepare_pipeline(const ExperimentConfig& cfg);

ScenarioResult run_scenario(Pipeline& pipe, const ExperimentConfig& cfg,
                            int n_aug, double alpha,
                            const std::vector<EdaOp>& ops,
                            std::uint64_t aug_seed);

ScenarioResult run_baseline(const ExperimentConfig& cfg);
SweepReport run_sweep(const ExperimentConfig& cfg);
AblationReport run_ablation(const ExperimentConfig& cfg);

// report.cpp — all rendering is byte-deterministic for a fixed report.
std::string render_sweep_csv(const SweepReport& report);
std::string render_sweep_md(const SweepReport& report);
std::string render_comparison_md(const SweepReport& report);
std::string render_deviation_md(const SweepReport& report);
std::string render_ablation_csv(const AblationReport& report);
std::string render_ablation_svg(const AblationReport& report);

// Writes the files the chosen formats imply into cfg.out_dir.
void write_sweep_outputs(const SweepReport& report, const ExperimentConfig& cfg);
void write_ablation_outputs(const AblationReport& report,
                            const ExperimentConfig& cfg);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace edasvm
