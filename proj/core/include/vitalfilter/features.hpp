#ifndef VITALFILTER_FEATURES_HPP
#define VITALFILTER_FEATURES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vitalfilter/aspects.hpp"
#include "vitalfilter/corpus.hpp"
#include "vitalfilter/mentions.hpp"
#include "vitalfilter/patterns.hpp"
#include "vitalfilter/tokenized.hpp"
#include "vitalfilter/topics.hpp"

namespace vitalfilter {

// Fixed, named feature order. All vectors extracted under one configuration
// share a schema; models refuse vectors whose schema fingerprint differs.
class FeatureSchema {
 public:
  // The complete schema: basic + saliency + timeliness features plus one
  // ASPECTSIM component per aspect, one RELOPEN component per pattern group,
  // and the 15 RELSCHEMA components.
  static FeatureSchema full(const AspectModel& aspects, const PatternCatalog& catalog);

  // Only the features inherited from earlier filtering systems: SRC, LANG,
  // REL, DOCREL, mention counts/positions, profile similarities, and the
  // PREMENTION window counts. Used by the basic_only model kind.
  static FeatureSchema basic();

  // Schema with exactly these names (e.g. from an instance file header);
  // one-hot group structure is not recovered.
  static FeatureSchema from_names(std::vector<std::string> names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  std::size_t index_of(const std::string& name) const;  // throws ConfigError

  // FNV-1a over the newline-joined name list.
  std::uint64_t fingerprint() const;

  // Indices of each one-hot group (values must sum to exactly 1).
  const std::vector<std::vector<std::size_t>>& onehot_groups() const { return groups_; }

 private:
  void add(std::string name);
  void add_onehot(const std::string& prefix, const std::vector<std::string>& values);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> groups_;
};

struct FeatureVector {
  std::vector<double> values;  // aligned with the owning schema's names
};

// Copies the named columns of `source` into the order of `target`. Every
// target name must exist in the source schema.
FeatureVector project(const FeatureSchema& source, const FeatureVector& vec,
                      const FeatureSchema& target);

// Per-entity mention counts in hourly bins over the stream, feeding the
// PREMENTION_h features. Queries only ever look at buckets strictly before
// the querying document's bucket, so a fully built history leaks no future
// information into extraction.
class MentionHistory {
 public:
  static std::int64_t bucket_of(std::int64_t stream_time);

  void add(const std::string& entity_id, std::int64_t bucket, std::int64_t count);

  // Sum of counts in buckets [doc_bucket - hours, doc_bucket - 1].
  std::int64_t window_count(const std::string& entity_id, std::int64_t doc_bucket,
                            int hours) const;

  bool empty() const { return counts_.empty(); }

 private:
  std::unordered_map<std::string, std::map<std::int64_t, std::int64_t>> counts_;
};

// Single chronological pass; every topic with at least one full or partial
// match in a document contributes its mention count to that document's hour
// bucket. Throws OrderingError on a decreasing timestamp.
MentionHistory build_mention_history(const std::vector<Document>& stream,
                                     const Registry& registry);

struct TimelinessCounts {
  std::int64_t year = 0;        // TMATCH_Y
  std::int64_t year_month = 0;  // TMATCH_YM
  std::int64_t year_month_day = 0;  // TMATCH_YMD
};

// Sentence-level creation-date matching: TMATCH_Y counts occurrences of the
// creation year as a standalone 4-digit token; TMATCH_YM counts sentences
// where the year co-occurs with the creation month (English month name,
// 3-letter abbreviation, or a 1-2 digit number attached to '-' or '/');
// TMATCH_YMD additionally requires the day of month (optionally with an
// ordinal suffix). Nested by construction: Y >= YM >= YMD.
TimelinessCounts extract_timeliness(const Document& doc, const TokenizedDoc& tokens);
TimelinessCounts extract_timeliness(const Document& doc);

struct UtcDate {
  int year;
  int month;  // 1..12
  int day;    // 1..31
};
UtcDate utc_date_of(std::int64_t seconds_since_epoch);

inline constexpr std::array<std::string_view, 11> kLanguageVocabulary = {
    "en", "de", "fr", "es", "it", "pt", "nl", "ru", "zh", "ja", "OTHER"};

class FeatureExtractor {
 public:
  // aspects/catalog may be null only if the schema carries no ASPECTSIM /
  // RELOPEN components; a size mismatch between them and the schema is a
  // ConfigError. The registry resolves related-entity ids for DOCREL.
  FeatureExtractor(const FeatureSchema& schema, const AspectModel* aspects,
                   const PatternCatalog* catalog, const Registry& registry,
                   PatternMatchMode pattern_mode = PatternMatchMode::kSurface);
  ~FeatureExtractor();
  FeatureExtractor(const FeatureExtractor&) = delete;
  FeatureExtractor& operator=(const FeatureExtractor&) = delete;

  // Document-level work shared by every entity paired with the document.
  struct DocContext {
    const Document* doc = nullptr;
    TokenizedDoc tokens;
    std::vector<double> aspect_sims;
    std::vector<std::int64_t> open_relations;
    std::vector<std::int64_t> schema_relations;
    TimelinessCounts timeliness;
    double doclen_chunk = 0;  // maximal runs of non-stopword tokens
    double num_entities = 0;  // distinct normalized mention surfaces
    double num_mentions = 0;
  };

  DocContext make_context(const Document& doc) const;

  FeatureVector extract(const DocContext& ctx, const EntityTopic& topic,
                        const MentionHistory& history) const;

  FeatureVector extract(const Document& doc, const EntityTopic& topic,
                        const MentionHistory& history) const;

  const FeatureSchema& schema() const { return schema_; }
  const AliasIndex& alias_index(const EntityTopic& topic) const;

 private:
  struct Plan;

  const FeatureSchema& schema_;
  const AspectModel* aspects_;
  const PatternCatalog* catalog_;
  const Registry& registry_;
  PatternMatchMode pattern_mode_;
  std::unique_ptr<Plan> plan_;
  mutable std::unordered_map<std::string, std::unique_ptr<AliasIndex>> alias_cache_;
};

inline constexpr std::array<std::string_view, 4> kRawLabels = {"vital", "useful", "neutral",
                                                               "garbage"};
bool is_valid_raw_label(std::string_view label);

struct LabeledInstance {
  std::string entity_id;
  std::string doc_id;
  std::int64_t stream_time = 0;
  std::string raw_label;  // one of kRawLabels
  FeatureVector features;

  int label() const { return raw_label == "vital" ? 1 : 0; }
};

struct InstanceTable {
  FeatureSchema schema = FeatureSchema::from_names({});
  std::vector<LabeledInstance> rows;
};

// entity_id \t doc_id \t stream_time \t raw_label \t <feature columns...>;
// the first line is a header naming every column. Doubles are written in
// shortest round-trip form.
void write_instances_tsv(const InstanceTable& table, const std::string& path);
InstanceTable read_instances_tsv(const std::string& path);

}  // namespace vitalfilter

#endif  // VITALFILTER_FEATURES_HPP
