#ifndef VITALFILTER_SYNTHETIC_HPP
#define VITALFILTER_SYNTHETIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vitalfilter/aspects.hpp"
#include "vitalfilter/corpus.hpp"
#include "vitalfilter/eval.hpp"
#include "vitalfilter/patterns.hpp"
#include "vitalfilter/topics.hpp"

namespace vitalfilter {

// Seeded generator for a desk-scale stream with planted signal: vital
// documents carry aspect vocabulary, open-relation phrases, creation-date
// expressions, and salient target mentions; non-vital documents bury the
// target among unrelated entities. Everything is ASCII and deterministic in
// the seed.
struct SyntheticSpec {
  std::size_t documents = 2000;
  std::size_t entities = 30;  // round-robin wiki/web/null profiles
  std::uint64_t seed = 1;
  std::int64_t start_time = 1325376000;  // 2012-01-01T00:00:00Z
  std::int64_t spacing = 1800;           // seconds between documents
  std::size_t wiki_articles = 36;
};

struct SyntheticDataset {
  SyntheticSpec spec;
  std::vector<Document> corpus;  // chronological
  std::vector<EntityTopic> topics;
  JudgmentSet judgments;  // one judged pair per document
  std::vector<WikiArticle> articles;
  std::vector<PhraseCount> phrase_counts;
};

SyntheticDataset generate_synthetic(const SyntheticSpec& spec);

// Additional documents strictly after the dataset's last timestamp, with no
// judgments attached. Used to check that future stream content cannot change
// earlier predictions.
std::vector<Document> generate_future_documents(const SyntheticDataset& dataset,
                                                std::size_t count, std::uint64_t seed);

struct SyntheticPaths {
  std::string corpus;
  std::string topics;
  std::string judgments;
  std::string articles;
  std::string phrases;
};

// Writes corpus.jsonl, topics.json, judgments.tsv, articles.jsonl, and
// phrases.tsv under dir (created if needed).
SyntheticPaths write_synthetic(const SyntheticDataset& dataset, const std::string& dir);

}  // namespace vitalfilter

#endif  // VITALFILTER_SYNTHETIC_HPP
