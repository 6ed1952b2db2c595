#include "vitalfilter/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>

#include <json.hpp>

#include "vitalfilter/aspects.hpp"
#include "vitalfilter/corpus.hpp"
#include "vitalfilter/errors.hpp"
#include "vitalfilter/patterns.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct SplitIndices {
  std::vector<std::size_t> train;  // stream_time <= cutoff, label in {vital, useful}
  std::vector<std::size_t> test;   // stream_time > cutoff
};

SplitIndices split_by_cutoff(const InstanceTable& table, const Registry& registry) {
  SplitIndices split;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const EntityTopic* topic = registry.find(row.entity_id);
    if (!topic) continue;
    if (row.stream_time <= topic->train_cutoff) {
      if (row.raw_label == "vital" || row.raw_label == "useful") split.train.push_back(i);
    } else {
      split.test.push_back(i);
    }
  }
  return split;
}

std::vector<LabeledInstance> gather(const InstanceTable& table,
                                    const std::vector<std::size_t>& indices) {
  std::vector<LabeledInstance> rows;
  rows.reserve(indices.size());
  for (std::size_t i : indices) rows.push_back(table.rows[i]);
  return rows;
}

bool has_both_classes(const std::vector<LabeledInstance>& rows) {
  bool pos = false, neg = false;
  for (const auto& row : rows) (row.label() ? pos : neg) = true;
  return pos && neg;
}

// Judged pairs from the evaluation period: document present in the corpus
// and timestamped after the entity's training cutoff.
JudgmentSet evaluation_judgments(const JudgmentSet& judgments, const Registry& registry,
                                 const std::map<std::string, std::int64_t>& doc_times) {
  JudgmentSet out;
  for (const auto& [entity_id, docs] : judgments.by_entity()) {
    const EntityTopic* topic = registry.find(entity_id);
    if (!topic) continue;
    for (const auto& [doc_id, raw_label] : docs) {
      auto it = doc_times.find(doc_id);
      if (it == doc_times.end()) continue;
      if (it->second > topic->train_cutoff) out.add(entity_id, doc_id, raw_label);
    }
  }
  return out;
}

JudgmentSet restrict_to_entities(const JudgmentSet& judgments,
                                 const std::set<std::string>& entity_ids) {
  JudgmentSet out;
  for (const auto& [entity_id, docs] : judgments.by_entity()) {
    if (!entity_ids.count(entity_id)) continue;
    for (const auto& [doc_id, raw_label] : docs) out.add(entity_id, doc_id, raw_label);
  }
  return out;
}

std::string importance_to_json(const GbdtModel& model) {
  auto importance = feature_importance(model);
  std::vector<std::pair<std::string, double>> ranked(importance.begin(), importance.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  ordered_json j = ordered_json::array();
  for (const auto& [feature, value] : ranked) {
    ordered_json fj;
    fj["feature"] = feature;
    fj["importance"] = value;
    j.push_back(std::move(fj));
  }
  return j.dump(2) + "\n";
}

int baseline_confidence(double name_fraction) {
  return std::clamp(static_cast<int>(std::lround(1000.0 * name_fraction)), 0, 1000);
}

}  // namespace

AssembledInstances assemble_instances(const std::vector<Document>& corpus,
                                      const Registry& registry, const JudgmentSet& judgments,
                                      const FeatureExtractor& extractor,
                                      const MentionHistory& history) {
  // doc_id -> judged entity ids, in deterministic (sorted) order.
  std::map<std::string, std::vector<std::string>> judged_entities;
  for (const auto& [entity_id, docs] : judgments.by_entity())
    for (const auto& [doc_id, raw_label] : docs) judged_entities[doc_id].push_back(entity_id);

  AssembledInstances out;
  out.table.schema = extractor.schema();
  for (const auto& doc : corpus) {
    auto judged = judged_entities.find(doc.doc_id);
    if (judged == judged_entities.end()) continue;

    FeatureExtractor::DocContext ctx = extractor.make_context(doc);
    for (const auto& entity_id : judged->second) {
      const EntityTopic* topic = registry.find(entity_id);
      if (!topic) continue;
      const AliasIndex& index = extractor.alias_index(*topic);
      if (!index.passes_prefilter(ctx.tokens)) continue;

      LabeledInstance row;
      row.entity_id = entity_id;
      row.doc_id = doc.doc_id;
      row.stream_time = doc.stream_time;
      row.raw_label = judgments.by_entity().at(entity_id).at(doc.doc_id);
      row.features = extractor.extract(ctx, *topic, history);
      out.table.rows.push_back(std::move(row));
      out.name_fractions.push_back(index.name_fraction(ctx.tokens));
    }
  }
  return out;
}

SegmentedModels train_segmented(const FeatureSchema& schema,
                                const std::vector<LabeledInstance>& train_rows,
                                const Registry& registry, const GbdtOptions& options) {
  if (train_rows.empty()) throw TrainingError("global training split is empty");
  SegmentedModels models;
  models.global = train_gbdt(schema, train_rows, options);

  for (const char* segment : {"wiki", "web", "null"}) {
    std::vector<LabeledInstance> subset;
    for (const auto& row : train_rows) {
      const EntityTopic* topic = registry.find(row.entity_id);
      if (topic && profile_kind_name(topic->profile.kind) == segment) subset.push_back(row);
    }
    if (subset.empty()) {
      models.warnings.push_back(std::string("segment ") + segment +
                                ": no training instances; falling back to the global model");
      continue;
    }
    if (!has_both_classes(subset)) {
      models.warnings.push_back(std::string("segment ") + segment +
                                ": single-class training data; falling back to the global model");
      continue;
    }
    models.by_segment.emplace(segment, train_gbdt(schema, subset, options));
  }
  return models;
}

namespace {

RunFile predict_run(const FeatureSchema& schema, const SegmentedModels& models, bool segmented,
                    const InstanceTable& table, const std::vector<std::size_t>& test_indices,
                    const Registry& registry, const std::string& run_name,
                    const std::string& hash) {
  RunFile run;
  run.name = run_name;
  run.config_hash = hash;
  for (std::size_t i : test_indices) {
    const auto& row = table.rows[i];
    const GbdtModel* model = &models.global;
    if (segmented) {
      const EntityTopic* topic = registry.find(row.entity_id);
      if (topic) {
        auto it = models.by_segment.find(std::string(profile_kind_name(topic->profile.kind)));
        if (it != models.by_segment.end()) model = &it->second;
      }
    }
    RunEntry entry;
    entry.entity_id = row.entity_id;
    entry.doc_id = row.doc_id;
    entry.confidence = predict_confidence(*model, schema, row.features);
    run.entries.push_back(std::move(entry));
  }
  return run;
}

RunFile baseline_run(const AssembledInstances& assembled,
                     const std::vector<std::size_t>& test_indices, const std::string& run_name,
                     const std::string& hash) {
  RunFile run;
  run.name = run_name;
  run.config_hash = hash;
  for (std::size_t i : test_indices) {
    const auto& row = assembled.table.rows[i];
    RunEntry entry;
    entry.entity_id = row.entity_id;
    entry.doc_id = row.doc_id;
    entry.confidence = baseline_confidence(assembled.name_fractions[i]);
    run.entries.push_back(std::move(entry));
  }
  return run;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.output_dir.empty()) throw ConfigError("output_dir is required");
  fs::create_directories(config.output_dir);
  const std::string hash = config_hash(config);

  Registry registry = load_topics(config.topics);
  JudgmentSet judgments = read_judgments(config.judgments);
  std::vector<Document> corpus = read_corpus(config.corpus, /*require_ordered=*/true);

  std::optional<AspectModel> aspects;
  std::optional<PatternCatalog> catalog;
  FeatureSchema schema = FeatureSchema::basic();
  if (config.model_kind == ModelKind::kEidfFull) {
    aspects = load_aspect_model(config.aspects);
    catalog = load_pattern_catalog(config.patterns);
    if (aspects->requested != config.num_aspects)
      throw ConfigError("aspect model was built with m=" + std::to_string(aspects->requested) +
                        " but the configuration says " + std::to_string(config.num_aspects));
    if (catalog->requested != config.num_patterns)
      throw ConfigError("pattern catalog was built with n=" + std::to_string(catalog->requested) +
                        " but the configuration says " + std::to_string(config.num_patterns));
    schema = FeatureSchema::full(*aspects, *catalog);
  }

  FeatureExtractor extractor(schema, aspects ? &*aspects : nullptr,
                             catalog ? &*catalog : nullptr, registry);
  MentionHistory history = build_mention_history(corpus, registry);
  AssembledInstances assembled = assemble_instances(corpus, registry, judgments, extractor,
                                                    history);
  SplitIndices split = split_by_cutoff(assembled.table, registry);

  std::map<std::string, std::int64_t> doc_times;
  for (const auto& doc : corpus) doc_times[doc.doc_id] = doc.stream_time;
  JudgmentSet eval_judgments = evaluation_judgments(judgments, registry, doc_times);

  ExperimentResult result;
  result.output_dir = config.output_dir;
  result.train_instances = split.train.size();
  result.test_instances = split.test.size();
  for (const auto& w : registry.warnings()) result.warnings.push_back(w);

  GbdtOptions options;
  options.trees = config.trees;
  options.max_depth = config.max_depth;
  options.shrinkage = config.shrinkage;
  options.seed = config.seed;

  const std::string run_name = std::string(model_kind_name(config.model_kind)) + "." +
                               std::string(experiment_mode_name(config.mode));
  std::map<std::string, std::string> output_files;  // name -> path (hashed into the manifest)

  auto write_report = [&](const ScoreReport& report, const std::string& stem,
                          bool with_text) -> void {
    const std::string json_path = (fs::path(config.output_dir) / (stem + ".report.json")).string();
    write_file(json_path, report_to_json(report));
    output_files[stem + ".report.json"] = json_path;
    result.report_paths.push_back(json_path);
    if (with_text) {
      const std::string text_path = (fs::path(config.output_dir) / (stem + ".report.txt")).string();
      write_file(text_path, report_to_text(report));
      output_files[stem + ".report.txt"] = text_path;
      result.report_paths.push_back(text_path);
    }
  };
  auto write_run = [&](const RunFile& run, const std::string& stem) -> void {
    const std::string path = (fs::path(config.output_dir) / (stem + ".run.tsv")).string();
    write_run_file(run, path);
    output_files[stem + ".run.tsv"] = path;
    result.run_paths.push_back(path);
  };

  if (config.mode == ExperimentMode::kUnseenCv) {
    std::vector<std::string> entity_ids;
    for (const auto& topic : registry.topics()) entity_ids.push_back(topic.entity_id);
    auto folds = cv_split_entities(entity_ids, config.cv_folds, config.seed);

    RunFile overall;
    overall.name = run_name;
    overall.config_hash = hash;
    for (std::size_t f = 0; f < folds.size(); ++f) {
      const std::string stem = "fold" + std::to_string(f + 1);
      std::set<std::string> train_set(folds[f].train_ids.begin(), folds[f].train_ids.end());
      std::set<std::string> test_set(folds[f].test_ids.begin(), folds[f].test_ids.end());

      std::vector<std::size_t> test_indices;
      for (std::size_t i : split.test)
        if (test_set.count(assembled.table.rows[i].entity_id)) test_indices.push_back(i);

      RunFile fold_run;
      if (config.model_kind == ModelKind::kNameFractionBaseline) {
        fold_run = baseline_run(assembled, test_indices, run_name + "." + stem, hash);
      } else {
        std::vector<LabeledInstance> train_rows;
        for (std::size_t i : split.train)
          if (train_set.count(assembled.table.rows[i].entity_id))
            train_rows.push_back(assembled.table.rows[i]);
        if (train_rows.empty())
          throw TrainingError("training split for " + stem + " is empty");
        if (!has_both_classes(train_rows))
          throw TrainingError("training split for " + stem + " is single-class");

        SegmentedModels models;
        if (config.segmented) {
          models = train_segmented(schema, train_rows, registry, options);
          for (const auto& w : models.warnings)
            result.warnings.push_back(stem + ": " + w);
        } else {
          models.global = train_gbdt(schema, train_rows, options);
        }
        const std::string model_path =
            (fs::path(config.output_dir) / (stem + ".model.json")).string();
        save_gbdt(models.global, model_path);
        output_files[stem + ".model.json"] = model_path;
        const std::string imp_path =
            (fs::path(config.output_dir) / (stem + ".importance.json")).string();
        write_file(imp_path, importance_to_json(models.global));
        output_files[stem + ".importance.json"] = imp_path;

        fold_run = predict_run(schema, models, config.segmented, assembled.table, test_indices,
                               registry, run_name + "." + stem, hash);
      }
      write_run(fold_run, stem);

      JudgmentSet fold_judgments = restrict_to_entities(eval_judgments, test_set);
      ScoreReport fold_report = sweep_f_macro(fold_run, fold_judgments);
      write_report(fold_report, stem, /*with_text=*/false);
      result.fold_reports.push_back(std::move(fold_report));

      for (auto& entry : fold_run.entries) overall.entries.push_back(std::move(entry));
    }

    write_run(overall, "overall");
    result.overall = sweep_f_macro(overall, eval_judgments);
    write_report(result.overall, "overall", /*with_text=*/true);
  } else {
    RunFile run;
    if (config.model_kind == ModelKind::kNameFractionBaseline) {
      run = baseline_run(assembled, split.test, run_name, hash);
    } else {
      std::vector<LabeledInstance> train_rows = gather(assembled.table, split.train);
      if (train_rows.empty()) throw TrainingError("global training split is empty");
      if (!has_both_classes(train_rows))
        throw TrainingError("global training split is single-class");

      SegmentedModels models;
      if (config.segmented) {
        models = train_segmented(schema, train_rows, registry, options);
        for (const auto& w : models.warnings) result.warnings.push_back(w);
        for (const auto& [segment, model] : models.by_segment) {
          const std::string path =
              (fs::path(config.output_dir) / ("model_" + segment + ".json")).string();
          save_gbdt(model, path);
          output_files["model_" + segment + ".json"] = path;
        }
      } else {
        models.global = train_gbdt(schema, train_rows, options);
      }
      const std::string model_path = (fs::path(config.output_dir) / "model.json").string();
      save_gbdt(models.global, model_path);
      output_files["model.json"] = model_path;
      const std::string imp_path = (fs::path(config.output_dir) / "importance.json").string();
      write_file(imp_path, importance_to_json(models.global));
      output_files["importance.json"] = imp_path;

      run = predict_run(schema, models, config.segmented, assembled.table, split.test, registry,
                        run_name, hash);
    }
    write_run(run, "main");

    result.overall = sweep_f_macro(run, eval_judgments);
    if (config.mode == ExperimentMode::kMainLongtail)
      result.overall.segments = segment_report(result.overall.per_entity, registry);
    write_report(result.overall, "main", /*with_text=*/true);
  }

  // Manifest: everything needed to reproduce the runs byte for byte.
  ordered_json manifest;
  manifest["config_hash"] = hash;
  manifest["config_text"] = config_to_text(config);
  manifest["seed"] = config.seed;
  ordered_json inputs;
  inputs["corpus"] = to_hex(fnv1a_file(config.corpus));
  inputs["topics"] = to_hex(fnv1a_file(config.topics));
  inputs["judgments"] = to_hex(fnv1a_file(config.judgments));
  if (config.model_kind == ModelKind::kEidfFull) {
    inputs["aspects"] = to_hex(fnv1a_file(config.aspects));
    inputs["patterns"] = to_hex(fnv1a_file(config.patterns));
  }
  manifest["inputs"] = std::move(inputs);
  ordered_json counts;
  counts["documents"] = corpus.size();
  counts["topics"] = registry.size();
  counts["judged_pairs"] = judgments.pair_count();
  counts["instances"] = assembled.table.rows.size();
  counts["train_instances"] = result.train_instances;
  counts["test_instances"] = result.test_instances;
  manifest["counts"] = std::move(counts);
  ordered_json outputs;
  for (const auto& [name, path] : output_files) outputs[name] = to_hex(fnv1a_file(path));
  manifest["outputs"] = std::move(outputs);
  manifest["warnings"] = result.warnings;

  result.manifest_path = (fs::path(config.output_dir) / "manifest.json").string();
  write_file(result.manifest_path, manifest.dump(2) + "\n");
  return result;
}

ExperimentResult run_experiment_from_manifest(const std::string& manifest_path) {
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(manifest_path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("manifest: ") + e.what());
  }
  if (!manifest.contains("config_text"))
    throw ConfigError("manifest has no embedded config_text");
  ExperimentConfig config = parse_experiment_config(manifest.at("config_text").get<std::string>());
  return run_experiment(config);
}

}  // namespace vitalfilter
