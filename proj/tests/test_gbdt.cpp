#include <doctest.h>

#include <cmath>
#include <random>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/gbdt.hpp"
#include "vitalfilter/rng.hpp"

using namespace vitalfilter;

namespace {

// Independent tree walker used by the identity checks: re-sums leaf values
// without calling GbdtModel::score.
double resummed_score(const GbdtModel& model, const std::vector<double>& x) {
  double total = 0;
  for (const auto& tree : model.trees) {
    std::size_t node = 0;
    while (true) {
      const TreeNode& n = tree.nodes[node];
      if (n.feature < 0) {
        total += n.value;
        break;
      }
      node = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] <= n.threshold
                                          ? n.left
                                          : n.right);
    }
  }
  return model.init_score + model.shrinkage * total;
}

std::vector<std::vector<double>> random_rows(std::mt19937_64& rng, std::size_t n,
                                             std::size_t width) {
  std::vector<std::vector<double>> rows(n, std::vector<double>(width));
  for (auto& row : rows)
    for (auto& v : row) v = uniform_unit(rng);
  return rows;
}

}  // namespace

TEST_CASE("k=0 predicts the base rate") {
  auto schema = FeatureSchema::from_names({"x"});
  GbdtOptions options;
  options.trees = 0;
  auto model = train_gbdt(schema, {{0.0}, {1.0}, {0.2}, {0.8}}, {0, 1, 0, 1}, options);
  CHECK(model.trees.empty());
  FeatureVector vec{{0.5}};
  CHECK(predict_probability(model, schema, vec) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(predict_confidence(model, schema, vec) == 500);
}

TEST_CASE("two separable instances are driven apart") {
  auto schema = FeatureSchema::from_names({"x"});
  GbdtOptions options;
  options.trees = 50;
  options.max_depth = 1;
  options.shrinkage = 0.1;
  auto model = train_gbdt(schema, {{0.0}, {1.0}}, {0, 1}, options);
  const double p1 = predict_probability(model, schema, FeatureVector{{1.0}});
  const double p0 = predict_probability(model, schema, FeatureVector{{0.0}});
  CHECK(p1 > 0.9);
  CHECK(p0 < 0.1);
}

TEST_CASE("separable rule is learned with high accuracy and importance") {
  std::mt19937_64 rng(20);
  auto schema = FeatureSchema::from_names({"x1", "x2", "x3", "x4", "x5"});
  auto rows = random_rows(rng, 200, 5);
  std::vector<int> labels;
  for (const auto& row : rows) labels.push_back(row[0] > 0.5 ? 1 : 0);

  GbdtOptions options;
  options.trees = 100;
  options.max_depth = 3;
  options.shrinkage = 0.1;
  auto model = train_gbdt(schema, rows, labels, options);

  std::size_t correct = 0;
  double loss = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double p = predict_probability(model, schema, FeatureVector{rows[i]});
    correct += (p >= 0.5 ? 1 : 0) == labels[i];
    loss += labels[i] ? -std::log(p) : -std::log(1 - p);
  }
  CHECK(double(correct) / double(rows.size()) >= 0.99);
  CHECK(loss / double(rows.size()) < 0.01);  // separable set drives logistic loss down

  auto importance = feature_importance(model);
  CHECK(importance.at("x1") > 0.9);
  double sum = 0;
  for (const auto& [name, value] : importance) sum += value;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("constant features are never selected") {
  std::mt19937_64 rng(21);
  auto schema = FeatureSchema::from_names({"x1", "flat"});
  auto rows = random_rows(rng, 100, 2);
  std::vector<int> labels;
  for (auto& row : rows) {
    row[1] = 3.25;
    labels.push_back(row[0] > 0.4 ? 1 : 0);
  }
  GbdtOptions options;
  options.trees = 30;
  options.max_depth = 3;
  auto model = train_gbdt(schema, rows, labels, options);
  auto importance = feature_importance(model);
  CHECK(importance.at("flat") == 0.0);
}

TEST_CASE("probability equals the logistic of the re-summed tree path") {
  std::mt19937_64 rng(22);
  auto schema = FeatureSchema::from_names({"a", "b", "c"});
  auto rows = random_rows(rng, 60, 3);
  std::vector<int> labels;
  for (const auto& row : rows) labels.push_back(row[1] + row[2] > 1.0 ? 1 : 0);
  if (std::count(labels.begin(), labels.end(), 1) == 0) labels[0] = 1;
  if (std::count(labels.begin(), labels.end(), 0) == 0) labels[0] = 0;

  GbdtOptions options;
  options.trees = 25;
  options.max_depth = 4;
  auto model = train_gbdt(schema, rows, labels, options);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x = {uniform_unit(rng), uniform_unit(rng), uniform_unit(rng)};
    const double p = predict_probability(model, schema, FeatureVector{x});
    const double expected = 1.0 / (1.0 + std::exp(-resummed_score(model, x)));
    CHECK(p == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("a single stump is monotone across its threshold") {
  auto schema = FeatureSchema::from_names({"x"});
  GbdtOptions options;
  options.trees = 1;
  options.max_depth = 1;
  options.shrinkage = 1.0;
  auto model = train_gbdt(schema, {{0.0}, {1.0}}, {0, 1}, options);
  REQUIRE(model.trees.size() == 1);
  const double below = predict_probability(model, schema, FeatureVector{{0.2}});
  const double above = predict_probability(model, schema, FeatureVector{{0.8}});
  CHECK(above > below);
}

TEST_CASE("confidence mapping") {
  CHECK(confidence_from_probability(0.5) == 500);
  CHECK(confidence_from_probability(0.9995) == 999);
  CHECK(confidence_from_probability(1e-9) == 0);
  CHECK(confidence_from_probability(0.0) == 0);
  CHECK(confidence_from_probability(1.0) == 1000);
  for (double p = 0.0; p <= 1.0; p += 0.01)
    CHECK(confidence_from_probability(p) <= confidence_from_probability(std::min(1.0, p + 0.01)));
}

TEST_CASE("single-class training data is rejected") {
  auto schema = FeatureSchema::from_names({"x"});
  CHECK_THROWS_AS(train_gbdt(schema, {{0.0}, {1.0}}, {1, 1}, GbdtOptions{}), TrainingError);
  CHECK_THROWS_AS(train_gbdt(schema, {{0.0}, {1.0}}, {0, 0}, GbdtOptions{}), TrainingError);
  CHECK_THROWS_AS(train_gbdt(schema, {}, {}, GbdtOptions{}), TrainingError);
}

TEST_CASE("mismatched widths and bad options are configuration errors") {
  auto schema = FeatureSchema::from_names({"x", "y"});
  CHECK_THROWS_AS(train_gbdt(schema, {{0.0}, {1.0, 2.0}}, {0, 1}, GbdtOptions{}), ConfigError);
  GbdtOptions bad_depth;
  bad_depth.max_depth = 0;
  CHECK_THROWS_AS(train_gbdt(schema, {{0.0, 0.0}, {1.0, 1.0}}, {0, 1}, bad_depth), ConfigError);
  GbdtOptions bad_shrinkage;
  bad_shrinkage.shrinkage = 1.5;
  CHECK_THROWS_AS(train_gbdt(schema, {{0.0, 0.0}, {1.0, 1.0}}, {0, 1}, bad_shrinkage),
                  ConfigError);
}

TEST_CASE("fingerprint mismatch is rejected at prediction time") {
  auto schema = FeatureSchema::from_names({"x"});
  auto other = FeatureSchema::from_names({"y"});
  auto model = train_gbdt(schema, {{0.0}, {1.0}}, {0, 1}, GbdtOptions{});
  CHECK_THROWS_AS(predict_probability(model, other, FeatureVector{{0.5}}), ConfigError);
}

TEST_CASE("training is deterministic") {
  std::mt19937_64 rng(23);
  auto schema = FeatureSchema::from_names({"a", "b", "c", "d"});
  auto rows = random_rows(rng, 80, 4);
  std::vector<int> labels;
  for (const auto& row : rows) labels.push_back(row[2] > 0.6 ? 1 : 0);
  if (std::count(labels.begin(), labels.end(), 1) == 0) labels[0] = 1;

  GbdtOptions options;
  options.trees = 20;
  options.max_depth = 4;
  auto a = train_gbdt(schema, rows, labels, options);
  auto b = train_gbdt(schema, rows, labels, options);
  CHECK(gbdt_to_json(a) == gbdt_to_json(b));
}

TEST_CASE("equal-gain splits prefer the lower feature index") {
  // Feature 1 duplicates feature 0, so every split gain ties.
  auto schema = FeatureSchema::from_names({"first", "duplicate"});
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  for (int i = 0; i < 20; ++i) {
    const double v = i / 19.0;
    rows.push_back({v, v});
    labels.push_back(v > 0.5 ? 1 : 0);
  }
  GbdtOptions options;
  options.trees = 5;
  options.max_depth = 2;
  auto model = train_gbdt(schema, rows, labels, options);
  for (const auto& tree : model.trees)
    for (const auto& node : tree.nodes)
      if (!node.is_leaf()) CHECK(node.feature == 0);
}

TEST_CASE("mean-residual trees never do worse than the best constant") {
  std::mt19937_64 rng(24);
  auto schema = FeatureSchema::from_names({"a", "b"});
  for (int trial = 0; trial < 10; ++trial) {
    auto rows = random_rows(rng, 50, 2);
    std::vector<int> labels;
    for (const auto& row : rows)
      labels.push_back(uniform_unit(rng) < 0.3 + 0.4 * row[0] ? 1 : 0);
    if (std::count(labels.begin(), labels.end(), 1) == 0) labels[0] = 1;
    if (std::count(labels.begin(), labels.end(), 0) == 0) labels[0] = 0;

    GbdtOptions options;
    options.trees = 1;
    options.max_depth = 3;
    options.newton_leaves = false;  // leaf = mean residual, the least-squares fit
    auto model = train_gbdt(schema, rows, labels, options);
    REQUIRE(model.trees.size() == 1);

    const double pbar = 1.0 / (1.0 + std::exp(-model.init_score));
    double mean_residual = 0;
    for (int y : labels) mean_residual += (y - pbar);
    mean_residual /= double(labels.size());

    double tree_sse = 0, const_sse = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double r = labels[i] - pbar;
      const double pred = model.trees[0].predict(rows[i]);
      tree_sse += (r - pred) * (r - pred);
      const_sse += (r - mean_residual) * (r - mean_residual);
    }
    CHECK(tree_sse <= const_sse + 1e-9);
  }
}

TEST_CASE("boosting stops at convergence before k rounds") {
  auto schema = FeatureSchema::from_names({"x"});
  GbdtOptions options;
  options.trees = 1000;
  options.max_depth = 1;
  options.shrinkage = 1.0;  // full Newton steps converge fast on 2 points
  auto model = train_gbdt(schema, {{0.0}, {1.0}}, {0, 1}, options);
  CHECK(model.trees.size() < 200);
}

TEST_CASE("model persistence round trip") {
  std::mt19937_64 rng(25);
  auto schema = FeatureSchema::from_names({"a", "b", "c"});
  auto rows = random_rows(rng, 40, 3);
  std::vector<int> labels;
  for (const auto& row : rows) labels.push_back(row[0] > 0.5 ? 1 : 0);
  if (std::count(labels.begin(), labels.end(), 1) == 0) labels[0] = 1;
  if (std::count(labels.begin(), labels.end(), 0) == 0) labels[0] = 0;

  GbdtOptions options;
  options.trees = 10;
  options.max_depth = 3;
  auto model = train_gbdt(schema, rows, labels, options);
  auto loaded = gbdt_from_json(gbdt_to_json(model));
  CHECK(gbdt_to_json(loaded) == gbdt_to_json(model));
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x = {uniform_unit(rng), uniform_unit(rng), uniform_unit(rng)};
    CHECK(predict_probability(loaded, schema, FeatureVector{x}) ==
          predict_probability(model, schema, FeatureVector{x}));
  }

  SUBCASE("tampered fingerprints are rejected") {
    auto text = gbdt_to_json(model);
    auto pos = text.find("\"a\"");
    text.replace(pos, 3, "\"z\"");
    CHECK_THROWS(gbdt_from_json(text));
  }
}

TEST_CASE("feature importance for an untrained ensemble is empty") {
  auto schema = FeatureSchema::from_names({"x"});
  GbdtOptions options;
  options.trees = 0;
  auto model = train_gbdt(schema, {{0.0}, {1.0}}, {0, 1}, options);
  CHECK(feature_importance(model).empty());
}
