// vfilter: command line front end for the vital-document filtering pipeline.
//
// Subcommands: synth, build-aspects, build-patterns, extract, train, predict,
// score, experiment. Every subcommand accepts --config (an experiment INI
// whose values seed the defaults) and --seed.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "vitalfilter/aspects.hpp"
#include "vitalfilter/config.hpp"
#include "vitalfilter/corpus.hpp"
#include "vitalfilter/errors.hpp"
#include "vitalfilter/eval.hpp"
#include "vitalfilter/experiment.hpp"
#include "vitalfilter/features.hpp"
#include "vitalfilter/gbdt.hpp"
#include "vitalfilter/patterns.hpp"
#include "vitalfilter/synthetic.hpp"
#include "vitalfilter/topics.hpp"
#include "vitalfilter/util.hpp"

namespace vf = vitalfilter;

namespace {

struct CommonArgs {
  std::string config_path;
  std::int64_t seed = -1;  // -1: keep the config/default seed

  vf::ExperimentConfig resolve() const {
    vf::ExperimentConfig config;
    if (!config_path.empty()) config = vf::load_experiment_config(config_path);
    if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
    return config;
  }
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "Experiment config INI providing defaults");
  cmd->add_option("--seed", args.seed, "Random seed (overrides the config)");
}

vf::GbdtOptions gbdt_options(const vf::ExperimentConfig& config) {
  vf::GbdtOptions options;
  options.trees = config.trees;
  options.max_depth = config.max_depth;
  options.shrinkage = config.shrinkage;
  options.seed = config.seed;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vital-document stream filtering"};
  app.require_subcommand(1);

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus with planted signal");
  CommonArgs synth_common;
  add_common(synth, synth_common);
  std::string synth_out = "synth";
  std::size_t synth_docs = 2000, synth_entities = 30;
  synth->add_option("--out-dir", synth_out, "Output directory");
  synth->add_option("--documents", synth_docs, "Number of stream documents");
  synth->add_option("--entities", synth_entities, "Number of filtering targets");
  synth->callback([&] {
    vf::SyntheticSpec spec;
    spec.documents = synth_docs;
    spec.entities = synth_entities;
    if (synth_common.seed >= 0) spec.seed = static_cast<std::uint64_t>(synth_common.seed);
    auto dataset = vf::generate_synthetic(spec);
    auto paths = vf::write_synthetic(dataset, synth_out);
    std::cout << "corpus:    " << paths.corpus << "\n"
              << "topics:    " << paths.topics << "\n"
              << "judgments: " << paths.judgments << "\n"
              << "articles:  " << paths.articles << "\n"
              << "phrases:   " << paths.phrases << "\n";
  });

  // build-aspects
  auto* build_aspects = app.add_subcommand("build-aspects", "Build the aspect model from articles");
  CommonArgs aspects_common;
  add_common(build_aspects, aspects_common);
  std::string articles_path, aspects_category = "person", aspects_out = "aspects.json";
  std::int64_t aspects_m = -1;
  build_aspects->add_option("--articles", articles_path, "Articles JSONL")->required();
  build_aspects->add_option("--category", aspects_category, "Article category to aggregate");
  build_aspects->add_option("-m,--num-aspects", aspects_m, "Number of aspects to keep");
  build_aspects->add_option("--out", aspects_out, "Output model JSON");
  build_aspects->callback([&] {
    auto config = aspects_common.resolve();
    const std::size_t m = aspects_m > 0 ? static_cast<std::size_t>(aspects_m) : config.num_aspects;
    auto articles = vf::read_wiki_articles(articles_path);
    auto model = vf::build_aspect_model(articles, aspects_category, m);
    vf::save_aspect_model(model, aspects_out);
    for (const auto& w : model.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "aspects: " << model.size() << " (requested " << m << ") -> " << aspects_out
              << "\n";
  });

  // build-patterns
  auto* build_patterns =
      app.add_subcommand("build-patterns", "Build the open-relation pattern catalog");
  CommonArgs patterns_common;
  add_common(build_patterns, patterns_common);
  std::string phrases_path, patterns_out = "patterns.json";
  std::int64_t patterns_n = -1;
  build_patterns->add_option("--phrases", phrases_path, "phrase<TAB>count TSV")->required();
  build_patterns->add_option("-n,--num-patterns", patterns_n, "Number of pattern groups to keep");
  build_patterns->add_option("--out", patterns_out, "Output catalog JSON");
  build_patterns->callback([&] {
    auto config = patterns_common.resolve();
    const std::size_t n =
        patterns_n > 0 ? static_cast<std::size_t>(patterns_n) : config.num_patterns;
    auto phrases = vf::read_phrase_counts(phrases_path);
    auto catalog = vf::build_pattern_catalog(phrases, n);
    vf::save_pattern_catalog(catalog, patterns_out);
    for (const auto& w : catalog.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "patterns: " << catalog.size() << " (requested " << n << ") -> " << patterns_out
              << "\n";
  });

  // extract
  auto* extract = app.add_subcommand("extract", "Extract feature vectors for judged pairs");
  CommonArgs extract_common;
  add_common(extract, extract_common);
  std::string ex_corpus, ex_topics, ex_judgments, ex_aspects, ex_patterns;
  std::string ex_out = "instances.tsv";
  bool ex_basic = false;
  extract->add_option("--corpus", ex_corpus, "Corpus JSONL");
  extract->add_option("--topics", ex_topics, "Topics JSON");
  extract->add_option("--judgments", ex_judgments, "Judgments TSV");
  extract->add_option("--aspects", ex_aspects, "Aspect model JSON");
  extract->add_option("--patterns", ex_patterns, "Pattern catalog JSON");
  extract->add_flag("--basic-only", ex_basic, "Extract only the basic feature set");
  extract->add_option("--out", ex_out, "Output instances TSV");
  extract->callback([&] {
    auto config = extract_common.resolve();
    if (!ex_corpus.empty()) config.corpus = ex_corpus;
    if (!ex_topics.empty()) config.topics = ex_topics;
    if (!ex_judgments.empty()) config.judgments = ex_judgments;
    if (!ex_aspects.empty()) config.aspects = ex_aspects;
    if (!ex_patterns.empty()) config.patterns = ex_patterns;

    auto registry = vf::load_topics(config.topics);
    auto judgments = vf::read_judgments(config.judgments);
    auto corpus = vf::read_corpus(config.corpus, /*require_ordered=*/true);

    std::optional<vf::AspectModel> aspects;
    std::optional<vf::PatternCatalog> catalog;
    vf::FeatureSchema schema = vf::FeatureSchema::basic();
    if (!ex_basic) {
      aspects = vf::load_aspect_model(config.aspects);
      catalog = vf::load_pattern_catalog(config.patterns);
      schema = vf::FeatureSchema::full(*aspects, *catalog);
    }
    vf::FeatureExtractor extractor(schema, aspects ? &*aspects : nullptr,
                                   catalog ? &*catalog : nullptr, registry);
    auto history = vf::build_mention_history(corpus, registry);
    auto assembled = vf::assemble_instances(corpus, registry, judgments, extractor, history);
    vf::write_instances_tsv(assembled.table, ex_out);
    std::cout << "instances: " << assembled.table.rows.size() << " x "
              << assembled.table.schema.size() << " features -> " << ex_out << "\n";
  });

  // train
  auto* train = app.add_subcommand("train", "Train a model on extracted instances");
  CommonArgs train_common;
  add_common(train, train_common);
  std::string tr_instances, tr_topics, tr_model_out = "model.json";
  std::string tr_kind;
  bool tr_segmented = false;
  std::int64_t tr_trees = -1, tr_depth = -1;
  double tr_shrinkage = -1;
  train->add_option("--instances", tr_instances, "Instances TSV")->required();
  train->add_option("--topics", tr_topics, "Topics JSON (for cutoffs and segments)");
  train->add_option("--model-kind", tr_kind, "eidf_full | basic_only");
  train->add_flag("--segmented", tr_segmented, "Also train per-segment models");
  train->add_option("-k,--trees", tr_trees, "Boosting rounds");
  train->add_option("-d,--max-depth", tr_depth, "Maximum tree depth");
  train->add_option("--shrinkage", tr_shrinkage, "Shrinkage (learning rate)");
  train->add_option("--out", tr_model_out, "Output model JSON");
  train->callback([&] {
    auto config = train_common.resolve();
    if (!tr_topics.empty()) config.topics = tr_topics;
    if (!tr_kind.empty()) {
      auto kind = vf::model_kind_from_name(tr_kind);
      if (!kind) throw vf::ConfigError("unknown model kind '" + tr_kind + "'");
      config.model_kind = *kind;
    }
    if (tr_trees > 0) config.trees = static_cast<std::size_t>(tr_trees);
    if (tr_depth > 0) config.max_depth = static_cast<int>(tr_depth);
    if (tr_shrinkage > 0) config.shrinkage = tr_shrinkage;
    if (tr_segmented) config.segmented = true;

    auto registry = vf::load_topics(config.topics);
    auto table = vf::read_instances_tsv(tr_instances);

    vf::FeatureSchema schema = table.schema;
    std::vector<vf::LabeledInstance> train_rows;
    for (const auto& row : table.rows) {
      const vf::EntityTopic* topic = registry.find(row.entity_id);
      if (!topic) continue;
      if (row.stream_time > topic->train_cutoff) continue;
      if (row.raw_label != "vital" && row.raw_label != "useful") continue;
      vf::LabeledInstance copy = row;
      if (config.model_kind == vf::ModelKind::kBasicOnly)
        copy.features = vf::project(table.schema, row.features, vf::FeatureSchema::basic());
      train_rows.push_back(std::move(copy));
    }
    if (config.model_kind == vf::ModelKind::kBasicOnly) schema = vf::FeatureSchema::basic();
    if (train_rows.empty()) throw vf::TrainingError("global training split is empty");

    if (config.segmented) {
      auto models = vf::train_segmented(schema, train_rows, registry, gbdt_options(config));
      for (const auto& w : models.warnings) std::cerr << "warning: " << w << "\n";
      vf::save_gbdt(models.global, tr_model_out);
      for (const auto& [segment, model] : models.by_segment) {
        const auto path = std::filesystem::path(tr_model_out).parent_path() /
                          ("model_" + segment + ".json");
        vf::save_gbdt(model, path.string());
        std::cout << "segment model: " << path.string() << "\n";
      }
    } else {
      auto model = vf::train_gbdt(schema, train_rows, gbdt_options(config));
      vf::save_gbdt(model, tr_model_out);
    }
    std::cout << "trained on " << train_rows.size() << " instances -> " << tr_model_out << "\n";
  });

  // predict
  auto* predict = app.add_subcommand("predict", "Score test instances into a run file");
  CommonArgs predict_common;
  add_common(predict, predict_common);
  std::string pr_instances, pr_topics, pr_model, pr_out = "run.tsv";
  bool pr_all = false;
  predict->add_option("--instances", pr_instances, "Instances TSV")->required();
  predict->add_option("--topics", pr_topics, "Topics JSON (for cutoffs)");
  predict->add_option("--model", pr_model, "Model JSON")->required();
  predict->add_flag("--all-instances", pr_all, "Predict every instance, not just the test split");
  predict->add_option("--out", pr_out, "Output run TSV");
  predict->callback([&] {
    auto config = predict_common.resolve();
    if (!pr_topics.empty()) config.topics = pr_topics;

    auto registry = vf::load_topics(config.topics);
    auto table = vf::read_instances_tsv(pr_instances);
    auto model = vf::load_gbdt(pr_model);
    vf::FeatureSchema model_schema = vf::FeatureSchema::from_names(model.feature_names);

    vf::RunFile run;
    run.name = "predict";
    for (const auto& row : table.rows) {
      const vf::EntityTopic* topic = registry.find(row.entity_id);
      if (!topic) continue;
      if (!pr_all && row.stream_time <= topic->train_cutoff) continue;
      vf::FeatureVector features = row.features;
      if (model_schema.fingerprint() != table.schema.fingerprint())
        features = vf::project(table.schema, row.features, model_schema);
      vf::RunEntry entry;
      entry.entity_id = row.entity_id;
      entry.doc_id = row.doc_id;
      entry.confidence = vf::predict_confidence(model, model_schema, features);
      run.entries.push_back(std::move(entry));
    }
    vf::write_run_file(run, pr_out);
    std::cout << "run entries: " << run.entries.size() << " -> " << pr_out << "\n";
  });

  // score
  auto* score = app.add_subcommand("score", "Score a run file against judgments");
  CommonArgs score_common;
  add_common(score, score_common);
  std::string sc_run, sc_judgments, sc_topics, sc_json, sc_text;
  bool sc_segmented = false;
  score->add_option("--run", sc_run, "Run TSV")->required();
  score->add_option("--judgments", sc_judgments, "Judgments TSV");
  score->add_option("--topics", sc_topics, "Topics JSON (for segment report)");
  score->add_flag("--segments", sc_segmented, "Add the per-segment table");
  score->add_option("--json-out", sc_json, "Write the report as JSON");
  score->add_option("--text-out", sc_text, "Write the report as aligned text");
  score->callback([&] {
    auto config = score_common.resolve();
    if (!sc_judgments.empty()) config.judgments = sc_judgments;
    if (!sc_topics.empty()) config.topics = sc_topics;

    auto run = vf::read_run_file(sc_run);
    auto judgments = vf::read_judgments(config.judgments);
    auto report = vf::sweep_f_macro(run, judgments);
    if (sc_segmented) {
      auto registry = vf::load_topics(config.topics);
      report.segments = vf::segment_report(report.per_entity, registry);
    }
    if (!sc_json.empty()) vf::write_file(sc_json, vf::report_to_json(report));
    if (!sc_text.empty()) vf::write_file(sc_text, vf::report_to_text(report));
    std::cout << vf::report_to_text(report);
  });

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run a configured experiment end to end");
  CommonArgs exp_common;
  add_common(experiment, exp_common);
  std::string exp_manifest, exp_out_dir, exp_mode, exp_kind;
  experiment->add_option("--from-manifest", exp_manifest, "Rerun the config embedded in a manifest");
  experiment->add_option("--out-dir", exp_out_dir, "Output directory (overrides the config)");
  experiment->add_option("--mode", exp_mode, "main_longtail | unseen_cv | all_entities");
  experiment->add_option("--model-kind", exp_kind,
                         "eidf_full | basic_only | name_fraction_baseline");
  experiment->callback([&] {
    vf::ExperimentResult result;
    if (!exp_manifest.empty()) {
      result = vf::run_experiment_from_manifest(exp_manifest);
    } else {
      auto config = exp_common.resolve();
      if (exp_common.config_path.empty())
        throw vf::ConfigError("experiment requires --config or --from-manifest");
      if (!exp_out_dir.empty()) config.output_dir = exp_out_dir;
      if (!exp_mode.empty()) {
        auto mode = vf::experiment_mode_from_name(exp_mode);
        if (!mode) throw vf::ConfigError("unknown experiment mode '" + exp_mode + "'");
        config.mode = *mode;
      }
      if (!exp_kind.empty()) {
        auto kind = vf::model_kind_from_name(exp_kind);
        if (!kind) throw vf::ConfigError("unknown model kind '" + exp_kind + "'");
        config.model_kind = *kind;
      }
      result = vf::run_experiment(config);
    }
    for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "f_macro=" << result.overall.f_macro
              << " best_theta=" << result.overall.best_theta
              << " su_max=" << result.overall.su_max << "\n"
              << "train_instances=" << result.train_instances
              << " test_instances=" << result.test_instances << "\n"
              << "manifest: " << result.manifest_path << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const vf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
