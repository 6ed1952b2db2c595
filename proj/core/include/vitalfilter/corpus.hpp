#ifndef VITALFILTER_CORPUS_HPP
#define VITALFILTER_CORPUS_HPP

#include <array>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vitalfilter {

// One stream item. Immutable value after parsing; offsets are Unicode scalar
// offsets into `text`.

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive

  bool contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
};

inline constexpr std::array<std::string_view, 5> kNeTypes = {
    "PER", "ORG", "FAC", "LOC", "OTHER"};

// The fixed ACE relation-type catalog; RELSCHEMA features use this order.
inline constexpr std::array<std::string_view, 15> kAceRelationTypes = {
    "located-in",
    "near",
    "part-whole-geo",
    "part-whole-org",
    "org-affiliation-employment",
    "org-affiliation-founder",
    "org-affiliation-ownership",
    "org-affiliation-membership",
    "person-social-family",
    "person-social-business",
    "person-social-lasting",
    "agent-artifact",
    "citizen-resident",
    "ethnicity",
    "org-location"};

inline constexpr std::array<std::string_view, 9> kSources = {
    "news",   "mainstream_news", "social",  "blog",       "forum",
    "arxiv",  "classifieds",     "reviews", "memetracker"};

// Index into kAceRelationTypes, or -1.
int ace_relation_index(std::string_view rel_type);
int source_index(std::string_view source);
int ne_type_index(std::string_view ne_type);

struct MentionAnnotation {
  Span span;
  std::string surface;  // must equal the text slice at span
  std::string ne_type;  // one of kNeTypes
};

struct RelationAnnotation {
  std::string rel_type;  // one of kAceRelationTypes
  Span arg1;
  Span arg2;
};

struct Document {
  std::string doc_id;
  std::int64_t stream_time = 0;  // seconds since epoch, creation time
  std::string source;            // one of kSources
  std::string language;          // 2-letter code
  std::string text;              // UTF-8
  std::vector<Span> sentences;   // non-overlapping, sorted by start
  std::vector<MentionAnnotation> mentions;
  std::vector<RelationAnnotation> relations;
};

// Throws SchemaError naming the document on any invariant violation: span
// bounds, sentence ordering, surface/slice mismatch, unknown categorical
// value, or a mention/relation argument outside every sentence.
void validate_document(const Document& doc);

Document document_from_json_line(std::string_view line, std::size_t line_number);
std::string document_to_json_line(const Document& doc);

// Lazy single-consumer JSONL reader: holds one document at a time.
class CorpusReader {
 public:
  explicit CorpusReader(const std::string& path, bool require_ordered = false);

  // Next document in file order, or nullopt at end of file.
  // Throws ParseError (with line number), SchemaError, or OrderingError
  // (naming both doc_ids) as documented for the corpus format.
  std::optional<Document> next();

  std::size_t documents_read() const { return count_; }

 private:
  std::ifstream in_;
  std::string path_;
  bool require_ordered_;
  std::size_t line_number_ = 0;
  std::size_t count_ = 0;
  bool have_prev_ = false;
  std::int64_t prev_time_ = 0;
  std::string prev_doc_id_;
};

std::vector<Document> read_corpus(const std::string& path, bool require_ordered = false);

// Validates every document before writing anything, then emits one JSON
// object per line with keys in the documented order. Returns the number of
// documents written. Output is byte-deterministic.
std::size_t write_corpus(const std::vector<Document>& stream, const std::string& path);

}  // namespace vitalfilter

#endif  // VITALFILTER_CORPUS_HPP
