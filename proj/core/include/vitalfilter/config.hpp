#ifndef VITALFILTER_CONFIG_HPP
#define VITALFILTER_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace vitalfilter {

enum class ExperimentMode { kMainLongtail, kUnseenCv, kAllEntities };
enum class ModelKind { kEidfFull, kBasicOnly, kNameFractionBaseline };

std::string_view experiment_mode_name(ExperimentMode mode);
std::optional<ExperimentMode> experiment_mode_from_name(std::string_view name);
std::string_view model_kind_name(ModelKind kind);
std::optional<ModelKind> model_kind_from_name(std::string_view name);

// One experiment, fully specified. Serializes to a canonical sectioned
// key/value text whose hash identifies the run in the manifest.
struct ExperimentConfig {
  // [paths]
  std::string corpus;
  std::string topics;
  std::string judgments;
  std::string aspects;   // built aspect model JSON; required for eidf_full
  std::string patterns;  // built pattern catalog JSON; required for eidf_full
  std::string output_dir;

  // [model]
  ModelKind model_kind = ModelKind::kEidfFull;
  bool segmented = false;

  // [experiment]
  ExperimentMode mode = ExperimentMode::kMainLongtail;
  std::uint64_t seed = 0;
  std::size_t cv_folds = 5;

  // [hyperparameters]
  std::size_t trees = 100;        // k
  int max_depth = 6;              // d
  std::size_t num_aspects = 50;   // m
  std::size_t num_patterns = 200; // n
  double shrinkage = 0.1;
};

// Strict INI-style parser: [section] headers, key = value lines, '#' or ';'
// full-line comments. Unknown sections or keys are ConfigErrors.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

// Canonical text form (fixed section and key order); parsing it back yields
// an equal config.
std::string config_to_text(const ExperimentConfig& config);

std::string config_hash(const ExperimentConfig& config);

}  // namespace vitalfilter

#endif  // VITALFILTER_CONFIG_HPP
