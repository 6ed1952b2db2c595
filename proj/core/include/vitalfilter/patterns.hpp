#ifndef VITALFILTER_PATTERNS_HPP
#define VITALFILTER_PATTERNS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vitalfilter/corpus.hpp"
#include "vitalfilter/tokenized.hpp"

namespace vitalfilter {

// One open-relation phrase with its corpus occurrence count.
struct PhraseCount {
  std::string phrase;
  std::int64_t count = 0;
};

struct PatternGroup {
  std::string lemma_key;                   // normalized lemmatized phrase
  std::vector<std::string> surface_forms;  // deduplicated members, sorted
  std::int64_t agg_count = 0;              // sum of member counts
};

// Ranked open-relation pattern groups: descending agg_count, ties broken by
// ascending lemma_key. At most the requested n groups are kept.
struct PatternCatalog {
  std::size_t requested = 0;
  std::vector<PatternGroup> patterns;
  std::vector<std::string> warnings;

  std::size_t size() const { return patterns.size(); }
};

// Groups phrases by lemmatized form, aggregates counts, keeps the top n.
// Fewer than n groups (or empty input) produces a smaller catalog plus a
// warning. Throws ConfigError for n < 1 and SchemaError for negative counts.
PatternCatalog build_pattern_catalog(const std::vector<PhraseCount>& phrases, std::size_t n);

// phrase \t count, one per line.
std::vector<PhraseCount> read_phrase_counts(const std::string& path);

std::string pattern_catalog_to_json(const PatternCatalog& catalog);
PatternCatalog pattern_catalog_from_json(const std::string& json_text);
void save_pattern_catalog(const PatternCatalog& catalog, const std::string& path);
PatternCatalog load_pattern_catalog(const std::string& path);

enum class PatternMatchMode {
  kSurface,  // match any member surface form (default)
  kLemma     // match the lemma key against the lemmatized sentence
};

// Per-sentence, leftmost-first, non-overlapping occurrence counts of each
// pattern group, summed over sentences. Component k corresponds to
// catalog.patterns[k]; tokens outside every sentence never match.
std::vector<std::int64_t> count_open_relations(
    const TokenizedDoc& doc, const PatternCatalog& catalog,
    PatternMatchMode mode = PatternMatchMode::kSurface);

// Document-level counts per ACE relation type (kAceRelationTypes order).
// Only relations whose argument spans both fall inside a PER-, ORG-, or
// LOC-typed mention are counted.
std::vector<std::int64_t> count_schema_relations(const Document& doc);

}  // namespace vitalfilter

#endif  // VITALFILTER_PATTERNS_HPP
