#include <benchmark/benchmark.h>

#include <random>

#include "vitalfilter/gbdt.hpp"
#include "vitalfilter/rng.hpp"

using namespace vitalfilter;

namespace {

struct Dataset {
  FeatureSchema schema = FeatureSchema::from_names({});
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
};

Dataset make_dataset(std::size_t n, std::size_t width) {
  std::mt19937_64 rng(7);
  std::vector<std::string> names;
  for (std::size_t j = 0; j < width; ++j) names.push_back("f" + std::to_string(j));
  Dataset data;
  data.schema = FeatureSchema::from_names(names);
  data.rows.assign(n, std::vector<double>(width));
  for (auto& row : data.rows) {
    for (auto& v : row) v = uniform_unit(rng);
    data.labels.push_back(row[0] + 0.3 * row[1 % width] > 0.7 ? 1 : 0);
  }
  if (std::count(data.labels.begin(), data.labels.end(), 1) == 0) data.labels[0] = 1;
  if (std::count(data.labels.begin(), data.labels.end(), 0) == 0) data.labels[0] = 0;
  return data;
}

}  // namespace

static void BM_TrainGbdt(benchmark::State& state) {
  const auto data = make_dataset(static_cast<std::size_t>(state.range(0)),
                                 static_cast<std::size_t>(state.range(1)));
  GbdtOptions options;
  options.trees = 50;
  options.max_depth = 6;
  for (auto _ : state) {
    auto model = train_gbdt(data.schema, data.rows, data.labels, options);
    benchmark::DoNotOptimize(model);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrainGbdt)->Args({500, 60})->Args({2000, 120})->Unit(benchmark::kMillisecond);

static void BM_Predict(benchmark::State& state) {
  const auto data = make_dataset(1000, 60);
  GbdtOptions options;
  options.trees = 100;
  options.max_depth = 6;
  const auto model = train_gbdt(data.schema, data.rows, data.labels, options);
  std::size_t i = 0;
  for (auto _ : state) {
    const double p =
        predict_probability(model, data.schema, FeatureVector{data.rows[i++ % data.rows.size()]});
    benchmark::DoNotOptimize(p);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Predict);
