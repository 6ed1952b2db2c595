#ifndef VITALFILTER_EXPERIMENT_HPP
#define VITALFILTER_EXPERIMENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vitalfilter/config.hpp"
#include "vitalfilter/eval.hpp"
#include "vitalfilter/features.hpp"
#include "vitalfilter/gbdt.hpp"

namespace vitalfilter {

// Instances assembled from a corpus: every judged (entity, document) pair
// whose document contains a full canonical-name match, in stream order, with
// the matched name fraction kept alongside for the official baseline.
struct AssembledInstances {
  InstanceTable table;
  std::vector<double> name_fractions;  // aligned with table.rows
};

AssembledInstances assemble_instances(const std::vector<Document>& corpus,
                                      const Registry& registry, const JudgmentSet& judgments,
                                      const FeatureExtractor& extractor,
                                      const MentionHistory& history);

// Segment-conditioned training: one model per profile kind with enough
// two-class data; segments that cannot be trained fall back to the global
// model with a warning.
struct SegmentedModels {
  GbdtModel global;
  std::map<std::string, GbdtModel> by_segment;  // keyed wiki/web/null
  std::vector<std::string> warnings;
};

SegmentedModels train_segmented(const FeatureSchema& schema,
                                const std::vector<LabeledInstance>& train_rows,
                                const Registry& registry, const GbdtOptions& options);

struct ExperimentResult {
  std::string output_dir;
  std::string manifest_path;
  ScoreReport overall;
  std::vector<ScoreReport> fold_reports;       // unseen_cv only
  std::vector<std::string> run_paths;          // fold runs + overall run
  std::vector<std::string> report_paths;
  std::vector<std::string> warnings;
  std::size_t train_instances = 0;
  std::size_t test_instances = 0;
};

// Runs one experiment end to end: loads inputs, assembles instances, trains
// (unless the model kind is the name-fraction baseline), predicts the test
// split, scores, and writes run files, reports, importance, and a manifest
// that pins every input hash and the seed. Reruns of the same manifest are
// byte-identical.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Reruns the configuration embedded in an existing manifest.
ExperimentResult run_experiment_from_manifest(const std::string& manifest_path);

}  // namespace vitalfilter

#endif  // VITALFILTER_EXPERIMENT_HPP
