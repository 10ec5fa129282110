// Command-line front end: preprocess, augment, train, evaluate, baseline,
// sweep, ablation.

#include <omp.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "edasvm/errors.hpp"
#include "edasvm/harness.hpp"
#include "edasvm/reference.hpp"
#include "edasvm/rng.hpp"
#include "edasvm/sha256.hpp"

namespace fs = std::filesystem;
using namespace edasvm;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  int threads = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

ExperimentConfig effective_config(const CommonOpts& common) {
  ExperimentConfig cfg = load_config(common.config_path);
  if (!common.out_dir.empty()) cfg.out_dir = common.out_dir;
  if (common.threads > 0) cfg.threads = common.threads;
  if (common.seed_set) cfg.seed = common.seed;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config JSON")
      ->required();
  cmd->add_option("--out", opts.out_dir, "output directory override");
  cmd->add_option("--threads", opts.threads, "OpenMP thread count");
  cmd->add_option("--seed", opts.seed, "master seed override")
      ->each([&opts](const std::string&) { opts.seed_set = true; });
}

void write_run_log(const ExperimentConfig& cfg, const Provenance& prov,
                   const std::vector<std::string>& lines, double wall) {
  fs::create_directories(cfg.out_dir);
  std::ofstream log(fs::path(cfg.out_dir) / "run.log");
  log << "config_sha256 " << prov.config_sha256 << "\n";
  log << "dataset_sha256 " << prov.dataset_sha256 << "\n";
  log << "seed " << prov.seed << "\n";
  log << "threads " << (cfg.threads > 0 ? cfg.threads : omp_get_max_threads())
      << "\n";
  for (const auto& l : lines) log << l << "\n";
  log << "wall_seconds " << wall << "\n";
  log << "config:\n" << config_canonical_json(cfg) << "\n";
}

std::string fmt_pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * v);
  return buf;
}

LabelMap parse_label_map(const std::string& spec) {
  // "positive=1,negative=-1"
  LabelMap map;
  std::istringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.rfind('=');
    if (eq == std::string::npos)
      throw ConfigError("label map entry needs key=value: " + item);
    map[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
  }
  if (map.empty()) throw ConfigError("empty label map");
  return map;
}

int run_preprocess(const std::string& dataset, const std::string& text_col,
                   const std::string& label_col, const std::string& label_map,
                   const std::string& stop, const std::string& norm,
                   const std::string& roots, const std::string& thes,
                   const PreprocessConfig& pcfg, const std::string& out) {
  Corpus corpus = load_dataset(dataset, text_col, label_col,
                               parse_label_map(label_map));
  LexiconSet lex = load_lexicons(stop, norm, roots, thes);
  PreprocessStats stats;
  TokenDocs docs = preprocess_corpus(corpus, lex, pcfg, &stats);
  write_token_csv(out, docs);
  std::cout << "wrote " << docs.size() << " documents to " << out;
  if (!stats.dropped_ids.empty())
    std::cout << " (dropped " << stats.dropped_ids.size() << " empty)";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indonesian sentiment pipeline: EDA + TF-IDF + polynomial SVM"};
  app.require_subcommand(1);

  // ---- preprocess ----
  auto* pre = app.add_subcommand("preprocess", "dataset CSV -> token CSV");
  std::string pre_dataset, pre_out = "tokens.csv";
  std::string pre_text_col = "Instagram Comment Text", pre_label_col = "Sentiment";
  std::string pre_label_map = "positive=1,negative=-1";
  std::string pre_stop, pre_norm, pre_roots, pre_thes;
  PreprocessConfig pre_cfg;
  pre->add_option("--dataset", pre_dataset)->required();
  pre->add_option("--text-column", pre_text_col);
  pre->add_option("--label-column", pre_label_col);
  pre->add_option("--label-map", pre_label_map);
  pre->add_option("--stopwords", pre_stop)->required();
  pre->add_option("--normalization", pre_norm)->required();
  pre->add_option("--roots", pre_roots)->required();
  pre->add_option("--thesaurus", pre_thes)->required();
  pre->add_option("--out", pre_out);
  pre->add_flag("!--no-mentions", pre_cfg.strip_mentions, "keep @-mentions");
  pre->add_flag("!--no-urls", pre_cfg.strip_urls, "keep URLs");
  pre->add_flag("!--no-digits", pre_cfg.strip_digits, "keep digits");
  pre->add_flag("!--no-emoji", pre_cfg.strip_emoji, "keep emoji");
  pre->add_flag("!--no-normalize", pre_cfg.normalize, "skip normalization");
  pre->add_flag("!--no-stopwords-removal", pre_cfg.remove_stop,
                "skip stopword removal");
  pre->add_flag("!--no-stem", pre_cfg.stem, "skip stemming");

  // ---- augment ----
  auto* aug = app.add_subcommand("augment", "token CSV -> augmented token CSV");
  std::string aug_in, aug_out = "augmented.csv";
  std::string aug_stop, aug_thes;
  double aug_alpha = 0.1;
  int aug_naug = 4;
  std::string aug_ops = "sr,ri,rs,rd";
  std::uint64_t aug_seed = 42;
  aug->add_option("--in", aug_in)->required();
  aug->add_option("--out", aug_out);
  aug->add_option("--alpha", aug_alpha);
  aug->add_option("--naug", aug_naug);
  aug->add_option("--ops", aug_ops, "comma list from sr,ri,rs,rd");
  aug->add_option("--seed", aug_seed);
  aug->add_option("--stopwords", aug_stop)->required();
  aug->add_option("--thesaurus", aug_thes)->required();

  // ---- train ----
  auto* train = app.add_subcommand("train", "full training run -> model bundle");
  CommonOpts train_opts;
  std::string train_model = "model.txt";
  add_common(train, train_opts);
  train->add_option("--model", train_model, "model bundle output path");

  // ---- evaluate ----
  auto* eval = app.add_subcommand("evaluate", "score a saved model bundle");
  CommonOpts eval_opts;
  std::string eval_model;
  add_common(eval, eval_opts);
  eval->add_option("--model", eval_model, "model bundle path")->required();

  // ---- baseline / sweep / ablation ----
  auto* base = app.add_subcommand("baseline", "no-augmentation reference run");
  CommonOpts base_opts;
  add_common(base, base_opts);

  auto* sweep = app.add_subcommand("sweep", "full (n_aug, alpha) grid");
  CommonOpts sweep_opts;
  add_common(sweep, sweep_opts);

  auto* abl = app.add_subcommand("ablation", "per-operation alpha sweep");
  CommonOpts abl_opts;
  add_common(abl, abl_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (pre->parsed()) {
      return run_preprocess(pre_dataset, pre_text_col, pre_label_col,
                            pre_label_map, pre_stop, pre_norm, pre_roots,
                            pre_thes, pre_cfg, pre_out);
    }

    if (aug->parsed()) {
      TokenDocs docs = read_token_csv(aug_in);
      LexiconSet lex;
      lex.stopwords = load_stopwords(aug_stop);
      lex.thesaurus = load_thesaurus(aug_thes);
      AugmentConfig cfg;
      cfg.alpha = aug_alpha;
      cfg.n_aug = aug_naug;
      cfg.seed = aug_seed;
      cfg.enabled_ops.clear();
      std::istringstream ss(aug_ops);
      std::string op;
      while (std::getline(ss, op, ',')) cfg.enabled_ops.push_back(eda_op_from_name(op));
      TokenDocs out = augment_corpus(docs, cfg, lex);
      write_token_csv(aug_out, out);
      std::cout << "wrote " << out.size() << " documents to " << aug_out << "\n";
      return 0;
    }

    if (train->parsed()) {
      ExperimentConfig cfg = effective_config(train_opts);
      double t0 = omp_get_wtime();
      Pipeline pipe = prepare_pipeline(cfg);
      TfIdfModel tfidf = TfIdfModel::fit(pipe.train_docs);
      TrainingSet ts;
      ts.x = tfidf.transform_batch(pipe.train_docs);
      for (const auto& d : pipe.train_docs) ts.y.push_back(label_value(d.label));
      SvmModel model = train_smo(ts, pipe.hyper);
      model.tfidf = tfidf;
      model.has_tfidf = true;
      model.dataset_hash = pipe.provenance.dataset_sha256;
      model.lexicon_hash = pipe.provenance.stopword_sha256;
      save_model(model, train_model);
      std::cout << "model with " << model.support_vectors.size()
                << " support vectors -> " << train_model << "\n";
      write_run_log(cfg, pipe.provenance, pipe.log_lines, omp_get_wtime() - t0);
      return 0;
    }

    if (eval->parsed()) {
      ExperimentConfig cfg = effective_config(eval_opts);
      SvmModel model = load_model(eval_model);
      if (!model.has_tfidf) throw SchemaMismatch("bundle lacks a TF-IDF model");
      Pipeline pipe = prepare_pipeline(cfg);
      std::vector<SparseVector> xs = model.tfidf.transform_batch(pipe.test_docs);
      std::vector<int> preds = predict_batch(model, xs);
      std::vector<int> truths;
      for (const auto& d : pipe.test_docs) truths.push_back(label_value(d.label));
      auto [cm, m] = confusion_metrics(preds, truths);
      std::cout << "test n=" << pipe.test_docs.size() << " tp=" << cm.tp
                << " fn=" << cm.fn << " fp=" << cm.fp << " tn=" << cm.tn << "\n";
      std::cout << "accuracy " << fmt_pct(m.accuracy) << "  precision "
                << fmt_pct(m.precision) << "  recall " << fmt_pct(m.recall)
                << "  f1 " << fmt_pct(m.f1) << "\n";
      return 0;
    }

    if (base->parsed()) {
      ExperimentConfig cfg = effective_config(base_opts);
      double t0 = omp_get_wtime();
      Pipeline pipe = prepare_pipeline(cfg);
      ScenarioResult r = run_scenario(pipe, cfg, 0, 0.0, cfg.ops, cfg.seed);
      std::cout << "baseline: " << cfg.cv.k << "-fold "
                << fmt_pct(r.mean_kfold) << ", test accuracy "
                << fmt_pct(r.test.accuracy) << ", precision "
                << fmt_pct(r.test.precision) << ", recall "
                << fmt_pct(r.test.recall) << ", f1 " << fmt_pct(r.test.f1)
                << "\n";
      SweepReport rep;
      rep.baseline = r;
      rep.cv_k = cfg.cv.k;
      rep.provenance = pipe.provenance;
      write_sweep_outputs(rep, cfg);
      write_run_log(cfg, pipe.provenance, pipe.log_lines, omp_get_wtime() - t0);
      return 0;
    }

    if (sweep->parsed()) {
      ExperimentConfig cfg = effective_config(sweep_opts);
      double t0 = omp_get_wtime();
      SweepReport rep = run_sweep(cfg);
      write_sweep_outputs(rep, cfg);
      const auto& best = rep.scenarios[rep.best_index];
      std::cout << "baseline " << fmt_pct(rep.baseline.mean_kfold)
                << " -> best n_aug=" << best.n_aug << " alpha=" << best.alpha
                << " " << fmt_pct(best.mean_kfold) << " (accuracy "
                << fmt_pct(best.test.accuracy) << ")\n";
      std::vector<std::string> log_lines;
      for (const auto& s : rep.scenarios) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "scenario n_aug=%d alpha=%.2f kfold=%.4f acc=%.4f wall=%.2fs",
                      s.n_aug, s.alpha, s.mean_kfold, s.test.accuracy,
                      s.wall_seconds);
        log_lines.push_back(buf);
      }
      write_run_log(cfg, rep.provenance, log_lines, omp_get_wtime() - t0);
      return 0;
    }

    if (abl->parsed()) {
      ExperimentConfig cfg = effective_config(abl_opts);
      double t0 = omp_get_wtime();
      AblationReport rep = run_ablation(cfg);
      write_ablation_outputs(rep, cfg);
      for (const auto& s : rep.series) {
        std::cout << eda_op_name(s.op) << ":";
        for (const auto& p : s.points) std::cout << " " << fmt_pct(p.mean_kfold);
        std::cout << "\n";
      }
      write_run_log(cfg, rep.provenance, {}, omp_get_wtime() - t0);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
