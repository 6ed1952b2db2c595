#include "vitalfilter/config.hpp"

#include <sstream>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

std::string trim(std::string_view s) {
  std::size_t begin = 0, end = s.size();
  while (begin < end && (s[begin] == ' ' || s[begin] == '\t')) ++begin;
  while (end > begin && (s[end - 1] == ' ' || s[end - 1] == '\t' || s[end - 1] == '\r')) --end;
  return std::string(s.substr(begin, end - begin));
}

bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

}  // namespace

std::string_view experiment_mode_name(ExperimentMode mode) {
  switch (mode) {
    case ExperimentMode::kMainLongtail: return "main_longtail";
    case ExperimentMode::kUnseenCv: return "unseen_cv";
    case ExperimentMode::kAllEntities: return "all_entities";
  }
  return "main_longtail";
}

std::optional<ExperimentMode> experiment_mode_from_name(std::string_view name) {
  if (name == "main_longtail") return ExperimentMode::kMainLongtail;
  if (name == "unseen_cv") return ExperimentMode::kUnseenCv;
  if (name == "all_entities") return ExperimentMode::kAllEntities;
  return std::nullopt;
}

std::string_view model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kEidfFull: return "eidf_full";
    case ModelKind::kBasicOnly: return "basic_only";
    case ModelKind::kNameFractionBaseline: return "name_fraction_baseline";
  }
  return "eidf_full";
}

std::optional<ModelKind> model_kind_from_name(std::string_view name) {
  if (name == "eidf_full") return ModelKind::kEidfFull;
  if (name == "basic_only") return ModelKind::kBasicOnly;
  if (name == "name_fraction_baseline") return ModelKind::kNameFractionBaseline;
  return std::nullopt;
}

ExperimentConfig parse_experiment_config(const std::string& text) {
  ExperimentConfig config;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("config line " + std::to_string(line_number) + ": unterminated section");
      section = line.substr(1, line.size() - 2);
      if (section != "paths" && section != "model" && section != "experiment" &&
          section != "hyperparameters")
        throw ConfigError("unknown config section '" + section + "'");
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_number) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (section == "paths") {
      if (key == "corpus") config.corpus = value;
      else if (key == "topics") config.topics = value;
      else if (key == "judgments") config.judgments = value;
      else if (key == "aspects") config.aspects = value;
      else if (key == "patterns") config.patterns = value;
      else if (key == "output_dir") config.output_dir = value;
      else throw ConfigError("unknown config key 'paths." + key + "'");
    } else if (section == "model") {
      if (key == "kind") {
        auto kind = model_kind_from_name(value);
        if (!kind) throw ConfigError("unknown model kind '" + value + "'");
        config.model_kind = *kind;
      } else if (key == "segmented") {
        config.segmented = parse_bool(value, key);
      } else {
        throw ConfigError("unknown config key 'model." + key + "'");
      }
    } else if (section == "experiment") {
      if (key == "mode") {
        auto mode = experiment_mode_from_name(value);
        if (!mode) throw ConfigError("unknown experiment mode '" + value + "'");
        config.mode = *mode;
      } else if (key == "seed") {
        config.seed = static_cast<std::uint64_t>(parse_int(value));
      } else if (key == "cv_folds") {
        config.cv_folds = static_cast<std::size_t>(parse_int(value));
      } else {
        throw ConfigError("unknown config key 'experiment." + key + "'");
      }
    } else if (section == "hyperparameters") {
      if (key == "trees") config.trees = static_cast<std::size_t>(parse_int(value));
      else if (key == "max_depth") config.max_depth = static_cast<int>(parse_int(value));
      else if (key == "num_aspects") config.num_aspects = static_cast<std::size_t>(parse_int(value));
      else if (key == "num_patterns")
        config.num_patterns = static_cast<std::size_t>(parse_int(value));
      else if (key == "shrinkage") config.shrinkage = parse_double(value);
      else throw ConfigError("unknown config key 'hyperparameters." + key + "'");
    } else {
      throw ConfigError("config line " + std::to_string(line_number) + ": key outside a section");
    }
  }
  return config;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  return parse_experiment_config(read_file(path));
}

std::string config_to_text(const ExperimentConfig& config) {
  std::string out;
  out += "[paths]\n";
  out += "corpus = " + config.corpus + "\n";
  out += "topics = " + config.topics + "\n";
  out += "judgments = " + config.judgments + "\n";
  out += "aspects = " + config.aspects + "\n";
  out += "patterns = " + config.patterns + "\n";
  out += "output_dir = " + config.output_dir + "\n";
  out += "\n[model]\n";
  out += "kind = " + std::string(model_kind_name(config.model_kind)) + "\n";
  out += "segmented = " + std::string(config.segmented ? "true" : "false") + "\n";
  out += "\n[experiment]\n";
  out += "mode = " + std::string(experiment_mode_name(config.mode)) + "\n";
  out += "seed = " + std::to_string(config.seed) + "\n";
  out += "cv_folds = " + std::to_string(config.cv_folds) + "\n";
  out += "\n[hyperparameters]\n";
  out += "trees = " + std::to_string(config.trees) + "\n";
  out += "max_depth = " + std::to_string(config.max_depth) + "\n";
  out += "num_aspects = " + std::to_string(config.num_aspects) + "\n";
  out += "num_patterns = " + std::to_string(config.num_patterns) + "\n";
  out += "shrinkage = " + format_double(config.shrinkage) + "\n";
  return out;
}

std::string config_hash(const ExperimentConfig& config) {
  return to_hex(fnv1a(config_to_text(config)));
}

}  // namespace vitalfilter
