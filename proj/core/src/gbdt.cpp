#include "vitalfilter/gbdt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

constexpr double kHessianFloor = 1e-12;
// Splits must clear this to be taken. The floor has to sit far below the
// squared convergence threshold (1e-8)^2, or boosting would stall on gains
// it refuses to take before the mean residual can reach the threshold.
constexpr double kMinGain = 1e-20;

inline double sigmoid(double s) { return 1.0 / (1.0 + std::exp(-s)); }

struct NodeState {
  std::int64_t count = 0;
  double sum = 0.0;  // residual sum over the node's instances
  int depth = 0;
  bool open = false;  // still a split candidate
};

struct BestSplit {
  double gain = 0.0;
  int feature = -1;
  double threshold = 0.0;
  double left_sum = 0.0;
  std::int64_t left_count = 0;
};

struct ScanState {
  double left_sum = 0.0;
  std::int64_t left_count = 0;
  double prev_value = 0.0;
  bool has_prev = false;
};

}  // namespace

double RegressionTree::predict(std::span<const double> features) const {
  int node = 0;
  while (!nodes[static_cast<std::size_t>(node)].is_leaf()) {
    const TreeNode& n = nodes[static_cast<std::size_t>(node)];
    node = features[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return nodes[static_cast<std::size_t>(node)].value;
}

double GbdtModel::score(std::span<const double> features) const {
  double total = 0.0;
  for (const auto& tree : trees) total += tree.predict(features);
  return init_score + shrinkage * total;
}

GbdtModel train_gbdt(const FeatureSchema& schema, const std::vector<LabeledInstance>& instances,
                     const GbdtOptions& options) {
  std::vector<std::vector<double>> rows;
  rows.reserve(instances.size());
  std::vector<int> labels;
  labels.reserve(instances.size());
  for (const auto& inst : instances) {
    rows.push_back(inst.features.values);
    labels.push_back(inst.label());
  }
  return train_gbdt(schema, rows, labels, options);
}

GbdtModel train_gbdt(const FeatureSchema& schema, const std::vector<std::vector<double>>& rows,
                     const std::vector<int>& labels, const GbdtOptions& options) {
  const std::size_t n = rows.size();
  const std::size_t width = schema.size();
  if (n != labels.size()) throw ConfigError("row/label count mismatch");
  if (options.max_depth < 1) throw ConfigError("max_depth must be >= 1");
  if (options.shrinkage <= 0.0 || options.shrinkage > 1.0)
    throw ConfigError("shrinkage must lie in (0, 1]");

  std::size_t positives = 0;
  for (int y : labels) positives += (y != 0);
  if (n == 0 || positives == 0 || positives == n)
    throw TrainingError("training data must contain both classes");
  for (const auto& row : rows)
    if (row.size() != width) throw ConfigError("row width does not match the feature schema");

  GbdtModel model;
  model.shrinkage = options.shrinkage;
  model.seed = options.seed;
  model.feature_names = schema.names();
  model.schema_fingerprint = schema.fingerprint();
  const double pbar = static_cast<double>(positives) / static_cast<double>(n);
  model.init_score = std::log(pbar / (1.0 - pbar));

  // Column-major copy plus one argsort per feature, shared by all rounds.
  std::vector<std::vector<double>> columns(width, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < width; ++j) columns[j][i] = rows[i][j];
  std::vector<std::vector<std::uint32_t>> sorted(width);
  for (std::size_t j = 0; j < width; ++j) {
    auto& order = sorted[j];
    order.resize(n);
    std::iota(order.begin(), order.end(), 0u);
    const auto& col = columns[j];
    std::sort(order.begin(), order.end(), [&col](std::uint32_t a, std::uint32_t b) {
      if (col[a] != col[b]) return col[a] < col[b];
      return a < b;
    });
  }

  std::vector<double> scores(n, model.init_score);
  std::vector<double> residual(n), hessian(n);
  std::vector<int> node_of(n, 0);

  for (std::size_t round = 0; round < options.trees; ++round) {
    double abs_residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double p = sigmoid(scores[i]);
      residual[i] = static_cast<double>(labels[i]) - p;
      hessian[i] = p * (1.0 - p);
      abs_residual += std::abs(residual[i]);
    }
    if (abs_residual / static_cast<double>(n) < options.convergence_threshold) break;

    RegressionTree tree;
    std::vector<NodeState> states;
    tree.nodes.push_back(TreeNode{});
    tree.nodes[0].count = static_cast<std::int64_t>(n);
    {
      NodeState root;
      root.count = static_cast<std::int64_t>(n);
      root.sum = std::accumulate(residual.begin(), residual.end(), 0.0);
      root.depth = 0;
      root.open = true;
      states.push_back(root);
    }
    std::fill(node_of.begin(), node_of.end(), 0);

    for (int depth = 0; depth < options.max_depth; ++depth) {
      std::vector<int> active;
      for (std::size_t id = 0; id < states.size(); ++id)
        if (states[id].open && states[id].depth == depth && states[id].count >= 2)
          active.push_back(static_cast<int>(id));
      if (active.empty()) break;

      std::vector<BestSplit> best(states.size());
      std::vector<ScanState> scan(states.size());

      for (std::size_t j = 0; j < width; ++j) {
        for (int id : active) scan[static_cast<std::size_t>(id)] = ScanState{};
        const auto& col = columns[j];
        for (std::uint32_t i : sorted[j]) {
          const int id = node_of[i];
          const NodeState& node = states[static_cast<std::size_t>(id)];
          if (!node.open || node.depth != depth || node.count < 2) continue;
          ScanState& st = scan[static_cast<std::size_t>(id)];
          const double v = col[i];
          if (st.has_prev && v > st.prev_value && st.left_count > 0 &&
              st.left_count < node.count) {
            const double right_sum = node.sum - st.left_sum;
            const std::int64_t right_count = node.count - st.left_count;
            const double gain = st.left_sum * st.left_sum / static_cast<double>(st.left_count) +
                                right_sum * right_sum / static_cast<double>(right_count) -
                                node.sum * node.sum / static_cast<double>(node.count);
            BestSplit& b = best[static_cast<std::size_t>(id)];
            if (gain > b.gain && gain > kMinGain) {
              b.gain = gain;
              b.feature = static_cast<int>(j);
              b.threshold = st.prev_value + (v - st.prev_value) / 2.0;
              b.left_sum = st.left_sum;
              b.left_count = st.left_count;
            }
          }
          st.left_sum += residual[i];
          st.left_count += 1;
          st.prev_value = v;
          st.has_prev = true;
        }
      }

      bool any_split = false;
      for (int id : active) {
        NodeState& node = states[static_cast<std::size_t>(id)];
        const BestSplit& b = best[static_cast<std::size_t>(id)];
        if (b.feature < 0) {
          node.open = false;
          continue;
        }
        any_split = true;
        TreeNode& tn = tree.nodes[static_cast<std::size_t>(id)];
        tn.feature = b.feature;
        tn.threshold = b.threshold;
        tn.gain = b.gain;
        tn.left = static_cast<int>(tree.nodes.size());
        tn.right = tn.left + 1;

        NodeState left, right;
        left.count = b.left_count;
        left.sum = b.left_sum;
        left.depth = depth + 1;
        left.open = true;
        right.count = node.count - b.left_count;
        right.sum = node.sum - b.left_sum;
        right.depth = depth + 1;
        right.open = true;

        TreeNode left_node, right_node;
        left_node.count = left.count;
        right_node.count = right.count;
        tree.nodes.push_back(left_node);
        tree.nodes.push_back(right_node);
        states.push_back(left);
        states.push_back(right);
        node.open = false;
      }
      if (!any_split) break;

      for (std::size_t i = 0; i < n; ++i) {
        const TreeNode& tn = tree.nodes[static_cast<std::size_t>(node_of[i])];
        if (tn.is_leaf()) continue;
        node_of[i] = columns[static_cast<std::size_t>(tn.feature)][i] <= tn.threshold ? tn.left
                                                                                      : tn.right;
      }
    }

    // Leaf values: one-step Newton estimate over each leaf's instances.
    std::vector<double> leaf_sum(tree.nodes.size(), 0.0);
    std::vector<double> leaf_hess(tree.nodes.size(), 0.0);
    std::vector<std::int64_t> leaf_count(tree.nodes.size(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto id = static_cast<std::size_t>(node_of[i]);
      leaf_sum[id] += residual[i];
      leaf_hess[id] += hessian[i];
      leaf_count[id] += 1;
    }
    for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
      TreeNode& tn = tree.nodes[id];
      if (!tn.is_leaf()) continue;
      if (options.newton_leaves) {
        tn.value = leaf_sum[id] / std::max(leaf_hess[id], kHessianFloor);
      } else {
        tn.value = leaf_count[id] > 0 ? leaf_sum[id] / static_cast<double>(leaf_count[id]) : 0.0;
      }
    }

    for (std::size_t i = 0; i < n; ++i)
      scores[i] +=
          options.shrinkage * tree.nodes[static_cast<std::size_t>(node_of[i])].value;

    model.trees.push_back(std::move(tree));
  }
  return model;
}

double predict_probability(const GbdtModel& model, const FeatureSchema& schema,
                           const FeatureVector& features) {
  if (schema.fingerprint() != model.schema_fingerprint)
    throw ConfigError("feature schema fingerprint does not match the model");
  if (features.values.size() != model.feature_names.size())
    throw ConfigError("feature vector width does not match the model");
  return sigmoid(model.score(features.values));
}

int confidence_from_probability(double probability) {
  int confidence = static_cast<int>(std::floor(probability * 1000.0));
  return std::clamp(confidence, 0, 1000);
}

int predict_confidence(const GbdtModel& model, const FeatureSchema& schema,
                       const FeatureVector& features) {
  return confidence_from_probability(predict_probability(model, schema, features));
}

std::map<std::string, double> feature_importance(const GbdtModel& model) {
  std::map<std::string, double> importance;
  if (model.trees.empty()) return importance;

  std::vector<double> totals(model.feature_names.size(), 0.0);
  for (const auto& tree : model.trees)
    for (const auto& node : tree.nodes)
      if (!node.is_leaf()) totals[static_cast<std::size_t>(node.feature)] += node.gain;

  double sum = std::accumulate(totals.begin(), totals.end(), 0.0);
  if (sum <= 0.0) return importance;
  for (std::size_t j = 0; j < totals.size(); ++j)
    importance[model.feature_names[j]] = totals[j] / sum;
  return importance;
}

std::string gbdt_to_json(const GbdtModel& model) {
  nlohmann::ordered_json j;
  j["init_score"] = model.init_score;
  j["shrinkage"] = model.shrinkage;
  j["seed"] = model.seed;
  j["schema_fingerprint"] = to_hex(model.schema_fingerprint);
  j["feature_names"] = model.feature_names;
  nlohmann::ordered_json trees = nlohmann::ordered_json::array();
  for (const auto& tree : model.trees) {
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const auto& node : tree.nodes) {
      nlohmann::ordered_json nj;
      if (node.is_leaf()) {
        nj["value"] = node.value;
        nj["count"] = node.count;
      } else {
        nj["feature"] = node.feature;
        nj["threshold"] = node.threshold;
        nj["gain"] = node.gain;
        nj["count"] = node.count;
        nj["left"] = node.left;
        nj["right"] = node.right;
      }
      nodes.push_back(std::move(nj));
    }
    nlohmann::ordered_json tj;
    tj["nodes"] = std::move(nodes);
    trees.push_back(std::move(tj));
  }
  j["trees"] = std::move(trees);
  return j.dump(2) + "\n";
}

GbdtModel gbdt_from_json(const std::string& json_text) {
  GbdtModel model;
  try {
    auto j = nlohmann::json::parse(json_text);
    model.init_score = j.at("init_score").get<double>();
    model.shrinkage = j.at("shrinkage").get<double>();
    model.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& name : j.at("feature_names"))
      model.feature_names.push_back(name.get<std::string>());
    std::string joined;
    for (const auto& name : model.feature_names) {
      joined += name;
      joined += '\n';
    }
    model.schema_fingerprint = fnv1a(joined);
    if (to_hex(model.schema_fingerprint) != j.at("schema_fingerprint").get<std::string>())
      throw ConfigError("model schema_fingerprint does not match its feature_names");
    for (const auto& tj : j.at("trees")) {
      RegressionTree tree;
      for (const auto& nj : tj.at("nodes")) {
        TreeNode node;
        if (nj.contains("feature")) {
          node.feature = nj.at("feature").get<int>();
          node.threshold = nj.at("threshold").get<double>();
          node.gain = nj.at("gain").get<double>();
          node.left = nj.at("left").get<int>();
          node.right = nj.at("right").get<int>();
        } else {
          node.value = nj.at("value").get<double>();
        }
        node.count = nj.at("count").get<std::int64_t>();
        tree.nodes.push_back(node);
      }
      const int node_count = static_cast<int>(tree.nodes.size());
      for (const auto& node : tree.nodes) {
        if (node.is_leaf()) continue;
        if (node.left < 0 || node.left >= node_count || node.right < 0 ||
            node.right >= node_count ||
            node.feature >= static_cast<int>(model.feature_names.size()))
          throw ConfigError("model file: tree node indices out of range");
      }
      model.trees.push_back(std::move(tree));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model file: ") + e.what());
  }
  return model;
}

void save_gbdt(const GbdtModel& model, const std::string& path) {
  write_file(path, gbdt_to_json(model));
}

GbdtModel load_gbdt(const std::string& path) {
  return gbdt_from_json(read_file(path));
}

}  // namespace vitalfilter
