#include <benchmark/benchmark.h>

#include "vitalfilter/aspects.hpp"
#include "vitalfilter/experiment.hpp"
#include "vitalfilter/features.hpp"
#include "vitalfilter/patterns.hpp"
#include "vitalfilter/synthetic.hpp"

using namespace vitalfilter;

namespace {

struct Pipeline {
  SyntheticDataset dataset;
  Registry registry = registry_from_topics({});
  AspectModel aspects;
  PatternCatalog catalog;

  Pipeline() {
    SyntheticSpec spec;
    spec.documents = 300;
    spec.entities = 12;
    spec.seed = 3;
    dataset = generate_synthetic(spec);
    registry = registry_from_topics(dataset.topics);
    aspects = build_aspect_model(dataset.articles, "person", 50);
    catalog = build_pattern_catalog(dataset.phrase_counts, 200);
  }
};

const Pipeline& pipeline() {
  static Pipeline p;
  return p;
}

}  // namespace

static void BM_AnalyzeDocument(benchmark::State& state) {
  const auto& p = pipeline();
  std::size_t i = 0;
  for (auto _ : state) {
    auto tokens = analyze(p.dataset.corpus[i++ % p.dataset.corpus.size()]);
    benchmark::DoNotOptimize(tokens);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AnalyzeDocument);

static void BM_ExtractFeatureVector(benchmark::State& state) {
  const auto& p = pipeline();
  auto schema = FeatureSchema::full(p.aspects, p.catalog);
  FeatureExtractor extractor(schema, &p.aspects, &p.catalog, p.registry);
  MentionHistory history = build_mention_history(p.dataset.corpus, p.registry);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& doc = p.dataset.corpus[i++ % p.dataset.corpus.size()];
    auto ctx = extractor.make_context(doc);
    auto vec = extractor.extract(ctx, p.registry.topics()[i % p.registry.size()], history);
    benchmark::DoNotOptimize(vec);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExtractFeatureVector);

static void BM_BuildMentionHistory(benchmark::State& state) {
  const auto& p = pipeline();
  for (auto _ : state) {
    auto history = build_mention_history(p.dataset.corpus, p.registry);
    benchmark::DoNotOptimize(history);
  }
  state.SetItemsProcessed(state.iterations() * p.dataset.corpus.size());
}
BENCHMARK(BM_BuildMentionHistory)->Unit(benchmark::kMillisecond);
