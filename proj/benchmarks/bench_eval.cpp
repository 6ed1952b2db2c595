#include <benchmark/benchmark.h>

#include <random>

#include "vitalfilter/eval.hpp"
#include "vitalfilter/rng.hpp"

using namespace vitalfilter;

namespace {

void make_inputs(std::size_t entities, std::size_t docs, RunFile& run, JudgmentSet& judgments) {
  std::mt19937_64 rng(11);
  static const char* labels[] = {"vital", "useful", "neutral", "garbage"};
  for (std::size_t e = 0; e < entities; ++e) {
    const std::string entity_id = "e" + std::to_string(e);
    for (std::size_t d = 0; d < docs; ++d) {
      const std::string doc_id = "d" + std::to_string(d);
      judgments.add(entity_id, doc_id, labels[uniform_below(rng, 4)]);
      RunEntry entry;
      entry.entity_id = entity_id;
      entry.doc_id = doc_id;
      entry.confidence = static_cast<int>(uniform_below(rng, 1001));
      run.entries.push_back(std::move(entry));
    }
  }
}

}  // namespace

static void BM_SweepFMacro(benchmark::State& state) {
  RunFile run;
  JudgmentSet judgments;
  make_inputs(static_cast<std::size_t>(state.range(0)),
              static_cast<std::size_t>(state.range(1)), run, judgments);
  for (auto _ : state) {
    auto report = sweep_f_macro(run, judgments);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(BM_SweepFMacro)->Args({30, 70})->Args({100, 300})->Unit(benchmark::kMillisecond);
