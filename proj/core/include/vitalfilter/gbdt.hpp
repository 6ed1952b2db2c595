#ifndef VITALFILTER_GBDT_HPP
#define VITALFILTER_GBDT_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vitalfilter/features.hpp"

namespace vitalfilter {

// One node of a regression tree. Internal nodes route x[feature] <= threshold
// to the left child and record the split's squared-error reduction and the
// sample count seen at fit time (feature importance reads both back).
struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  double gain = 0.0;
  std::int64_t count = 0;
  int left = -1;
  int right = -1;
  double value = 0.0;  // leaf score contribution, unscaled by shrinkage

  bool is_leaf() const { return feature < 0; }
};

struct RegressionTree {
  std::vector<TreeNode> nodes;  // root at index 0

  double predict(std::span<const double> features) const;
};

struct GbdtOptions {
  std::size_t trees = 100;  // k
  int max_depth = 6;        // d
  double shrinkage = 0.1;
  std::uint64_t seed = 0;
  // Leaf estimate: one-step Newton sum(r)/sum(p(1-p)) by default; plain mean
  // residual behind this flag for ablation.
  bool newton_leaves = true;
  // Boosting stops early when the mean absolute residual drops below this.
  double convergence_threshold = 1e-8;
};

// Boosted regression trees over logistic loss. Scores combine as
// s = init_score + shrinkage * sum_t tree_t(x); P = 1 / (1 + exp(-s)).
struct GbdtModel {
  double init_score = 0.0;  // log-odds of the positive class at fit time
  double shrinkage = 0.1;
  std::uint64_t seed = 0;
  std::vector<std::string> feature_names;
  std::uint64_t schema_fingerprint = 0;  // FNV-1a over feature_names
  std::vector<RegressionTree> trees;

  double score(std::span<const double> features) const;
};

// Fits init_score to the positive fraction, then boosts depth-limited trees
// on residuals y - p with exact greedy variance-reduction splits (candidate
// thresholds at midpoints of consecutive distinct values; ties prefer the
// lower feature index, then the lower threshold). Throws TrainingError when
// labels are single-class, ConfigError on schema/width mismatches.
GbdtModel train_gbdt(const FeatureSchema& schema, const std::vector<LabeledInstance>& instances,
                     const GbdtOptions& options);

// Row-matrix variant used by the one above; labels are 0/1.
GbdtModel train_gbdt(const FeatureSchema& schema, const std::vector<std::vector<double>>& rows,
                     const std::vector<int>& labels, const GbdtOptions& options);

// Fingerprint-checked prediction paths.
double predict_probability(const GbdtModel& model, const FeatureSchema& schema,
                           const FeatureVector& features);

int confidence_from_probability(double probability);  // floor(p*1000) in [0,1000]

int predict_confidence(const GbdtModel& model, const FeatureSchema& schema,
                       const FeatureVector& features);

// Per-feature share of the total squared-error reduction, averaged across
// trees and normalized to sum to 1. Empty for a model without splits.
std::map<std::string, double> feature_importance(const GbdtModel& model);

std::string gbdt_to_json(const GbdtModel& model);
GbdtModel gbdt_from_json(const std::string& json_text);
void save_gbdt(const GbdtModel& model, const std::string& path);
GbdtModel load_gbdt(const std::string& path);

}  // namespace vitalfilter

#endif  // VITALFILTER_GBDT_HPP
