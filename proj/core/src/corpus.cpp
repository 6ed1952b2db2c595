#include "vitalfilter/corpus.hpp"

#include <algorithm>

#include <json.hpp>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/text.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

using ordered_json = nlohmann::ordered_json;

Span span_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("end"))
    throw SchemaError("span must be an object with start/end");
  Span span;
  span.start = j.at("start").get<std::size_t>();
  span.end = j.at("end").get<std::size_t>();
  return span;
}

ordered_json span_to_json(const Span& span) {
  ordered_json j;
  j["start"] = span.start;
  j["end"] = span.end;
  return j;
}

void check_span(const Span& span, std::size_t text_length, const std::string& doc_id,
                const char* what) {
  if (span.start >= span.end || span.end > text_length)
    throw SchemaError("document " + doc_id + ": " + what + " span [" +
                      std::to_string(span.start) + "," + std::to_string(span.end) +
                      ") out of range for text of length " + std::to_string(text_length));
}

bool inside_some_sentence(const Span& span, const std::vector<Span>& sentences) {
  for (const auto& s : sentences)
    if (s.contains(span)) return true;
  return false;
}

}  // namespace

int ace_relation_index(std::string_view rel_type) {
  for (std::size_t i = 0; i < kAceRelationTypes.size(); ++i)
    if (kAceRelationTypes[i] == rel_type) return static_cast<int>(i);
  return -1;
}

int source_index(std::string_view source) {
  for (std::size_t i = 0; i < kSources.size(); ++i)
    if (kSources[i] == source) return static_cast<int>(i);
  return -1;
}

int ne_type_index(std::string_view ne_type) {
  for (std::size_t i = 0; i < kNeTypes.size(); ++i)
    if (kNeTypes[i] == ne_type) return static_cast<int>(i);
  return -1;
}

void validate_document(const Document& doc) {
  if (doc.doc_id.empty()) throw SchemaError("document with empty doc_id");
  if (source_index(doc.source) < 0)
    throw SchemaError("document " + doc.doc_id + ": unknown source '" + doc.source + "'");
  const std::size_t length = utf8_length(doc.text);

  std::size_t prev_end = 0;
  bool first = true;
  for (const auto& sent : doc.sentences) {
    check_span(sent, length, doc.doc_id, "sentence");
    if (!first && sent.start < prev_end)
      throw SchemaError("document " + doc.doc_id + ": sentence spans overlap or are unsorted");
    prev_end = sent.end;
    first = false;
  }

  for (const auto& mention : doc.mentions) {
    check_span(mention.span, length, doc.doc_id, "mention");
    if (ne_type_index(mention.ne_type) < 0)
      throw SchemaError("document " + doc.doc_id + ": unknown ne_type '" + mention.ne_type + "'");
    if (utf8_slice(doc.text, mention.span.start, mention.span.end) != mention.surface)
      throw SchemaError("document " + doc.doc_id + ": mention surface '" + mention.surface +
                        "' does not match text slice");
    if (!inside_some_sentence(mention.span, doc.sentences))
      throw SchemaError("document " + doc.doc_id + ": mention at [" +
                        std::to_string(mention.span.start) + "," +
                        std::to_string(mention.span.end) + ") lies outside every sentence");
  }

  for (const auto& rel : doc.relations) {
    if (ace_relation_index(rel.rel_type) < 0)
      throw SchemaError("document " + doc.doc_id + ": unknown rel_type '" + rel.rel_type + "'");
    check_span(rel.arg1, length, doc.doc_id, "relation arg1");
    check_span(rel.arg2, length, doc.doc_id, "relation arg2");
    if (!inside_some_sentence(rel.arg1, doc.sentences) ||
        !inside_some_sentence(rel.arg2, doc.sentences))
      throw SchemaError("document " + doc.doc_id +
                        ": relation argument lies outside every sentence");
  }
}

Document document_from_json_line(std::string_view line, std::size_t line_number) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_number);
  }
  if (!j.is_object()) throw ParseError("document line is not a JSON object", line_number);

  Document doc;
  try {
    doc.doc_id = j.at("doc_id").get<std::string>();
    doc.stream_time = j.at("stream_time").get<std::int64_t>();
    doc.source = j.at("source").get<std::string>();
    doc.language = j.at("language").get<std::string>();
    doc.text = j.at("text").get<std::string>();
    for (const auto& s : j.at("sentences")) doc.sentences.push_back(span_from_json(s));
    for (const auto& m : j.at("mentions")) {
      MentionAnnotation mention;
      mention.span = span_from_json(m.at("span"));
      mention.surface = m.at("surface").get<std::string>();
      mention.ne_type = m.at("ne_type").get<std::string>();
      doc.mentions.push_back(std::move(mention));
    }
    for (const auto& r : j.at("relations")) {
      RelationAnnotation rel;
      rel.rel_type = r.at("rel_type").get<std::string>();
      rel.arg1 = span_from_json(r.at("arg1"));
      rel.arg2 = span_from_json(r.at("arg2"));
      doc.relations.push_back(std::move(rel));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("document schema: ") + e.what(), line_number);
  }
  validate_document(doc);
  return doc;
}

std::string document_to_json_line(const Document& doc) {
  ordered_json j;
  j["doc_id"] = doc.doc_id;
  j["stream_time"] = doc.stream_time;
  j["source"] = doc.source;
  j["language"] = doc.language;
  j["text"] = doc.text;
  ordered_json sentences = ordered_json::array();
  for (const auto& s : doc.sentences) sentences.push_back(span_to_json(s));
  j["sentences"] = std::move(sentences);
  ordered_json mentions = ordered_json::array();
  for (const auto& m : doc.mentions) {
    ordered_json mj;
    mj["span"] = span_to_json(m.span);
    mj["surface"] = m.surface;
    mj["ne_type"] = m.ne_type;
    mentions.push_back(std::move(mj));
  }
  j["mentions"] = std::move(mentions);
  ordered_json relations = ordered_json::array();
  for (const auto& r : doc.relations) {
    ordered_json rj;
    rj["rel_type"] = r.rel_type;
    rj["arg1"] = span_to_json(r.arg1);
    rj["arg2"] = span_to_json(r.arg2);
    relations.push_back(std::move(rj));
  }
  j["relations"] = std::move(relations);
  return j.dump();
}

CorpusReader::CorpusReader(const std::string& path, bool require_ordered)
    : in_(path), path_(path), require_ordered_(require_ordered) {
  if (!in_) throw IoError("cannot open corpus " + path);
}

std::optional<Document> CorpusReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (line.empty()) continue;
    Document doc = document_from_json_line(line, line_number_);
    if (require_ordered_ && have_prev_ && doc.stream_time < prev_time_)
      throw OrderingError("corpus " + path_ + ": document '" + doc.doc_id +
                          "' at stream_time " + std::to_string(doc.stream_time) +
                          " precedes '" + prev_doc_id_ + "' at " + std::to_string(prev_time_));
    have_prev_ = true;
    prev_time_ = doc.stream_time;
    prev_doc_id_ = doc.doc_id;
    ++count_;
    return doc;
  }
  return std::nullopt;
}

std::vector<Document> read_corpus(const std::string& path, bool require_ordered) {
  CorpusReader reader(path, require_ordered);
  std::vector<Document> docs;
  while (auto doc = reader.next()) docs.push_back(std::move(*doc));
  return docs;
}

std::size_t write_corpus(const std::vector<Document>& stream, const std::string& path) {
  for (const auto& doc : stream) validate_document(doc);
  std::string out;
  for (const auto& doc : stream) {
    out += document_to_json_line(doc);
    out += '\n';
  }
  write_file(path, out);
  return stream.size();
}

}  // namespace vitalfilter
