#ifndef VITALFILTER_MENTIONS_HPP
#define VITALFILTER_MENTIONS_HPP

#include <set>
#include <string>
#include <vector>

#include "vitalfilter/tokenized.hpp"
#include "vitalfilter/topics.hpp"

namespace vitalfilter {

// Positional statistics of one entity's mentions in one document. All
// positions are token indices; -1 means "no such mention". Normalized
// variants divide by the document token count and are 0 when the mention
// kind is absent.
struct MentionStats {
  std::size_t num_full = 0;
  std::size_t num_partial = 0;
  long fpos_full = -1;
  long lpos_full = -1;
  long lpos_part = -1;
  long spread = 0;        // over full and partial mentions together
  long spread_full = 0;   // over full mentions only
  double fpos_full_n = 0.0;
  double lpos_full_n = 0.0;
  double spread_n = 0.0;
  double spread_full_n = 0.0;
  std::size_t num_sent = 0;  // sentences overlapping at least one mention
};

// Token-sequence matcher for one topic, reusable across documents.
// Full mention: contiguous case-insensitive token match of any alias,
// leftmost-longest, non-overlapping. Partial mention: a single token of the
// canonical name (length >= 2, not a stopword) outside every counted full
// mention. Throws SchemaError for an empty canonical name.
class AliasIndex {
 public:
  explicit AliasIndex(const EntityTopic& topic);

  MentionStats find_mentions(const TokenizedDoc& doc) const;

  // Fraction of distinct canonical-name tokens present in the document.
  double name_fraction(const TokenizedDoc& doc) const;

  // True when the document contains at least one full alias match.
  bool has_full_match(const TokenizedDoc& doc) const;

  // The stream pre-filter: a contiguous match of the canonical name itself.
  // Documents passing it always have name_fraction 1 and num_full >= 1.
  bool passes_prefilter(const TokenizedDoc& doc) const;

 private:
  std::vector<std::vector<std::string>> alias_tokens_;  // longest first
  std::vector<std::string> canonical_sequence_;
  std::set<std::string> partial_tokens_;
  std::set<std::string> canonical_tokens_;
};

MentionStats find_mentions(const Document& doc, const EntityTopic& topic);
double name_fraction(const Document& doc, const EntityTopic& topic);

}  // namespace vitalfilter

#endif  // VITALFILTER_MENTIONS_HPP
