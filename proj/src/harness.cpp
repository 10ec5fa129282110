#include "edasvm/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "edasvm/errors.hpp"
#include "edasvm/rng.hpp"
#include "edasvm/sha256.hpp"

namespace edasvm {

using nlohmann::json;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::vector<EdaOp> ops_from_json(const json& arr) {
  std::vector<EdaOp> ops;
  for (const auto& v : arr) ops.push_back(eda_op_from_name(v.get<std::string>()));
  return ops;
}

}  // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config " + path);
  json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("bad JSON: ") + e.what());
  }

  ExperimentConfig cfg;
  try {
    if (j.contains("dataset")) {
      const auto& d = j["dataset"];
      if (d.contains("path")) cfg.dataset_path = d["path"];
      if (d.contains("text_column")) cfg.text_column = d["text_column"];
      if (d.contains("label_column")) cfg.label_column = d["label_column"];
      if (d.contains("label_map")) {
        cfg.label_map.clear();
        for (auto it = d["label_map"].begin(); it != d["label_map"].end(); ++it)
          cfg.label_map[it.key()] = it.value().get<int>();
      }
    }
    if (j.contains("lexicons")) {
      const auto& l = j["lexicons"];
      if (l.contains("stopwords")) cfg.stopword_path = l["stopwords"];
      if (l.contains("normalization")) cfg.normalization_path = l["normalization"];
      if (l.contains("roots")) cfg.root_path = l["roots"];
      if (l.contains("thesaurus")) cfg.thesaurus_path = l["thesaurus"];
    }
    if (j.contains("preprocess")) {
      const auto& p = j["preprocess"];
      auto get = [&](const char* k, bool& out) {
        if (p.contains(k)) out = p[k].get<bool>();
      };
      get("strip_mentions", cfg.preprocess.strip_mentions);
      get("strip_urls", cfg.preprocess.strip_urls);
      get("strip_digits", cfg.preprocess.strip_digits);
      get("strip_emoji", cfg.preprocess.strip_emoji);
      get("normalize", cfg.preprocess.normalize);
      get("remove_stopwords", cfg.preprocess.remove_stop);
      get("stem", cfg.preprocess.stem);
    }
    if (j.contains("split")) {
      const auto& s = j["split"];
      if (s.contains("train_fraction"))
        cfg.split.train_fraction = s["train_fraction"].get<double>();
      if (s.contains("stratified")) cfg.split.stratified = s["stratified"].get<bool>();
    }
    if (j.contains("svm")) {
      const auto& s = j["svm"];
      if (s.contains("C")) cfg.svm.reg_c = s["C"].get<double>();
      if (s.contains("gamma")) cfg.svm.gamma = s["gamma"].get<double>();
      if (s.contains("degree")) cfg.svm.degree = s["degree"].get<int>();
      if (s.contains("coef0")) cfg.svm.coef0 = s["coef0"].get<double>();
      if (s.contains("tol")) cfg.svm.tol = s["tol"].get<double>();
      if (s.contains("max_passes")) cfg.svm.max_passes = s["max_passes"].get<int>();
      if (s.contains("cache_mb"))
        cfg.svm.cache_bytes = s["cache_mb"].get<std::size_t>() * (1ull << 20);
    }
    if (j.contains("grid_search")) {
      const auto& g = j["grid_search"];
      if (g.contains("enabled")) cfg.use_grid = g["enabled"].get<bool>();
      if (g.contains("C")) cfg.grid.reg_c = g["C"].get<std::vector<double>>();
      if (g.contains("gamma")) cfg.grid.gamma = g["gamma"].get<std::vector<double>>();
      if (g.contains("degree")) cfg.grid.degree = g["degree"].get<std::vector<int>>();
      if (g.contains("coef0")) cfg.grid.coef0 = g["coef0"].get<std::vector<double>>();
    }
    if (j.contains("cv")) {
      const auto& c = j["cv"];
      if (c.contains("k")) cfg.cv.k = c["k"].get<int>();
      if (c.contains("group_by_source"))
        cfg.cv.group_by_source = c["group_by_source"].get<bool>();
    }
    if (j.contains("eda")) {
      const auto& e = j["eda"];
      if (e.contains("n_aug")) cfg.n_augs = e["n_aug"].get<std::vector<int>>();
      if (e.contains("alpha")) cfg.alphas = e["alpha"].get<std::vector<double>>();
      if (e.contains("ops")) cfg.ops = ops_from_json(e["ops"]);
      if (e.contains("ablation_n_aug"))
        cfg.ablation_n_aug = e["ablation_n_aug"].get<int>();
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("formats"))
      cfg.formats = j["formats"].get<std::vector<std::string>>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }

  if (cfg.dataset_path.empty()) throw ConfigError("dataset.path is required");
  if (cfg.stopword_path.empty() || cfg.normalization_path.empty() ||
      cfg.root_path.empty() || cfg.thesaurus_path.empty())
    throw ConfigError("all four lexicon paths are required");
  if (cfg.alphas.empty() || cfg.n_augs.empty())
    throw ConfigError("eda.alpha and eda.n_aug must be nonempty");
  return cfg;
}

std::string config_canonical_json(const ExperimentConfig& cfg) {
  json j;
  j["dataset"]["path"] = cfg.dataset_path;
  j["dataset"]["text_column"] = cfg.text_column;
  j["dataset"]["label_column"] = cfg.label_column;
  for (const auto& [k, v] : cfg.label_map) j["dataset"]["label_map"][k] = v;
  j["lexicons"]["stopwords"] = cfg.stopword_path;
  j["lexicons"]["normalization"] = cfg.normalization_path;
  j["lexicons"]["roots"] = cfg.root_path;
  j["lexicons"]["thesaurus"] = cfg.thesaurus_path;
  j["preprocess"]["strip_mentions"] = cfg.preprocess.strip_mentions;
  j["preprocess"]["strip_urls"] = cfg.preprocess.strip_urls;
  j["preprocess"]["strip_digits"] = cfg.preprocess.strip_digits;
  j["preprocess"]["strip_emoji"] = cfg.preprocess.strip_emoji;
  j["preprocess"]["normalize"] = cfg.preprocess.normalize;
  j["preprocess"]["remove_stopwords"] = cfg.preprocess.remove_stop;
  j["preprocess"]["stem"] = cfg.preprocess.stem;
  j["split"]["train_fraction"] = cfg.split.train_fraction;
  j["split"]["stratified"] = cfg.split.stratified;
  j["svm"]["C"] = cfg.svm.reg_c;
  j["svm"]["gamma"] = cfg.svm.gamma;
  j["svm"]["degree"] = cfg.svm.degree;
  j["svm"]["coef0"] = cfg.svm.coef0;
  j["svm"]["tol"] = cfg.svm.tol;
  j["svm"]["max_passes"] = cfg.svm.max_passes;
  j["grid_search"]["enabled"] = cfg.use_grid;
  j["cv"]["k"] = cfg.cv.k;
  j["cv"]["group_by_source"] = cfg.cv.group_by_source;
  j["eda"]["n_aug"] = cfg.n_augs;
  j["eda"]["alpha"] = cfg.alphas;
  std::vector<std::string> opnames;
  for (EdaOp op : cfg.ops) opnames.push_back(eda_op_name(op));
  j["eda"]["ops"] = opnames;
  j["eda"]["ablation_n_aug"] = cfg.ablation_n_aug;
  j["seed"] = cfg.seed;
  // out_dir, formats and threads do not affect results; excluded from the hash
  return j.dump(2);
}

Pipeline prepare_pipeline(const ExperimentConfig& cfg) {
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  Pipeline pipe;
  Corpus corpus = load_dataset(cfg.dataset_path, cfg.text_column,
                               cfg.label_column, cfg.label_map);
  pipe.lexicons = load_lexicons(cfg.stopword_path, cfg.normalization_path,
                                cfg.root_path, cfg.thesaurus_path);

  pipe.provenance.dataset_sha256 = corpus.content_hash;
  pipe.provenance.stopword_sha256 = pipe.lexicons.stopwords.sha256;
  pipe.provenance.normalization_sha256 = pipe.lexicons.normalization.sha256;
  pipe.provenance.root_sha256 = pipe.lexicons.roots.sha256;
  pipe.provenance.thesaurus_sha256 = pipe.lexicons.thesaurus.sha256;
  pipe.provenance.config_sha256 = sha256_hex(config_canonical_json(cfg));
  pipe.provenance.seed = cfg.seed;

  pipe.log_lines.push_back("dataset " + cfg.dataset_path + " docs=" +
                           std::to_string(corpus.size()) + " pos=" +
                           std::to_string(corpus.count(Label::Positive)) +
                           " neg=" + std::to_string(corpus.count(Label::Negative)));
  pipe.log_lines.push_back("stopwords " +
                           std::to_string(pipe.lexicons.stopwords.size()) +
                           " entries");

  PreprocessStats stats;
  TokenDocs all_docs = preprocess_corpus(corpus, pipe.lexicons, cfg.preprocess,
                                         &stats);
  pipe.dropped_ids = stats.dropped_ids;
  if (!stats.dropped_ids.empty()) {
    std::string ids;
    for (auto id : stats.dropped_ids) ids += " " + std::to_string(id);
    pipe.log_lines.push_back("dropped empty-after-preprocess ids:" + ids);
  }

  // split over the surviving documents only, so both sides stay auditable
  Corpus survivors;
  survivors.source_path = corpus.source_path;
  survivors.content_hash = corpus.content_hash;
  {
    std::unordered_map<std::int64_t, const LabeledDocument*> by_id;
    for (const auto& d : corpus.docs) by_id[d.id] = &d;
    for (const auto& td : all_docs) survivors.docs.push_back(*by_id.at(td.source_id));
  }

  SplitConfig split_cfg = cfg.split;
  split_cfg.seed = cfg.seed;
  auto [train_raw, test_raw] = split_train_test(survivors, split_cfg);
  pipe.train_raw = std::move(train_raw);
  pipe.test_raw = std::move(test_raw);

  std::unordered_map<std::int64_t, TokenDoc*> token_by_id;
  for (auto& td : all_docs) token_by_id[td.source_id] = &td;
  for (const auto& d : pipe.train_raw.docs)
    pipe.train_docs.push_back(*token_by_id.at(d.id));
  for (const auto& d : pipe.test_raw.docs)
    pipe.test_docs.push_back(*token_by_id.at(d.id));

  pipe.log_lines.push_back(
      "split train=" + std::to_string(pipe.train_docs.size()) +
      " test=" + std::to_string(pipe.test_docs.size()));

  pipe.hyper = cfg.svm;
  pipe.hyper.seed = cfg.seed;
  if (cfg.use_grid) {
    CvConfig cv = cfg.cv;
    cv.seed = cfg.seed;
    GridSearchResult gs = grid_search(pipe.train_docs, cfg.grid, cv, pipe.hyper);
    pipe.hyper = gs.best;
    std::ostringstream ss;
    ss << "grid search best: C=" << gs.best.reg_c << " gamma=" << gs.best.gamma
       << " degree=" << gs.best.degree << " coef0=" << gs.best.coef0
       << " mean_cv=" << gs.best_score;
    pipe.log_lines.push_back(ss.str());
  }
  return pipe;
}

ScenarioResult run_scenario(Pipeline& pipe, const ExperimentConfig& cfg,
                            int n_aug, double alpha,
                            const std::vector<EdaOp>& ops,
                            std::uint64_t aug_seed) {
  double t0 = now_seconds();

  const TokenDocs* train = &pipe.train_docs;
  TokenDocs augmented;
  if (n_aug > 0) {
    AugmentConfig aug;
    aug.alpha = alpha;
    aug.n_aug = n_aug;
    aug.enabled_ops = ops;
    aug.seed = aug_seed;
    augmented = augment_corpus(pipe.train_docs, aug, pipe.lexicons);
    train = &augmented;
  }

  CvConfig cv = cfg.cv;
  cv.seed = cfg.seed;
  CvResult cvr = cross_validate(*train, pipe.hyper, cv);

  TfIdfModel tfidf = TfIdfModel::fit(*train);
  TrainingSet ts;
  ts.x = tfidf.transform_batch(*train);
  ts.y.reserve(train->size());
  for (const auto& d : *train) ts.y.push_back(label_value(d.label));
  SvmModel model = train_smo(ts, pipe.hyper);

  std::vector<SparseVector> test_x = tfidf.transform_batch(pipe.test_docs);
  std::vector<int> preds = predict_batch(model, test_x);
  std::vector<int> truths;
  truths.reserve(pipe.test_docs.size());
  for (const auto& d : pipe.test_docs) truths.push_back(label_value(d.label));
  auto [cm, metrics] = confusion_metrics(preds, truths);

  ScenarioResult result;
  result.n_aug = n_aug;
  result.alpha = alpha;
  result.mean_kfold = cvr.mean;
  result.per_fold = cvr.per_fold;
  result.test = metrics;
  result.wall_seconds = now_seconds() - t0;
  return result;
}

ScenarioResult run_baseline(const ExperimentConfig& cfg) {
  Pipeline pipe = prepare_pipeline(cfg);
  return run_scenario(pipe, cfg, 0, 0.0, cfg.ops, cfg.seed);
}

SweepReport run_sweep(const ExperimentConfig& cfg) {
  Pipeline pipe = prepare_pipeline(cfg);

  SweepReport report;
  report.cv_k = cfg.cv.k;
  report.provenance = pipe.provenance;
  report.baseline = run_scenario(pipe, cfg, 0, 0.0, cfg.ops, cfg.seed);

  double best_score = -1.0;
  for (std::size_t ni = 0; ni < cfg.n_augs.size(); ++ni) {
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
      std::uint64_t seed = mix_seed(
          cfg.seed, static_cast<std::uint64_t>(cfg.n_augs[ni]), ai);
      ScenarioResult r = run_scenario(pipe, cfg, cfg.n_augs[ni],
                                      cfg.alphas[ai], cfg.ops, seed);
      if (r.mean_kfold > best_score) {
        best_score = r.mean_kfold;
        report.best_index = report.scenarios.size();
      }
      report.scenarios.push_back(std::move(r));
    }
  }
  return report;
}

AblationReport run_ablation(const ExperimentConfig& cfg) {
  Pipeline pipe = prepare_pipeline(cfg);

  AblationReport report;
  report.n_aug = cfg.ablation_n_aug;
  report.provenance = pipe.provenance;
  report.baseline = run_scenario(pipe, cfg, 0, 0.0, cfg.ops, cfg.seed);

  for (EdaOp op : {EdaOp::SR, EdaOp::RI, EdaOp::RS, EdaOp::RD}) {
    AblationSeries series;
    series.op = op;
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai) {
      std::uint64_t seed = mix_seed(
          cfg.seed, 0xab1au + static_cast<std::uint64_t>(op), ai);
      series.points.push_back(run_scenario(pipe, cfg, cfg.ablation_n_aug,
                                           cfg.alphas[ai], {op}, seed));
    }
    report.series.push_back(std::move(series));
  }
  return report;
}

}  // namespace edasvm
