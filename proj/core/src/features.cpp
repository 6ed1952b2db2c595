#include "vitalfilter/features.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

std::string dashed(std::string_view key) {
  std::string out(key);
  for (char& c : out)
    if (c == ' ') c = '-';
  return out;
}

constexpr std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};
constexpr std::array<std::string_view, 12> kMonthAbbrev = {
    "jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::vector<std::uint32_t> decode_scalars(std::string_view text) {
  std::vector<std::uint32_t> scalars;
  scalars.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if ((c & 0xE0) == 0xC0) len = 2;
    else if ((c & 0xF0) == 0xE0) len = 3;
    else if ((c & 0xF8) == 0xF0) len = 4;
    // Only ASCII values matter to callers; non-ASCII scalars are opaque.
    scalars.push_back(c < 0x80 ? c : 0xFFFD);
    i += len;
  }
  return scalars;
}

// What each schema column is computed from.
enum class Field {
  kSrcOneHot,
  kLangOneHot,
  kDoclenChunk,
  kDoclenSent,
  kEntityTypeOneHot,
  kProfileTypeOneHot,
  kProfileLen,
  kRel,
  kDocRel,
  kNumFull,
  kNumPartial,
  kFposFull,
  kLposFull,
  kLposPart,
  kSprPos,
  kFposFullN,
  kLposFullN,
  kSprPosN,
  kLsprFullN,
  kNumSent,
  kSimCos,
  kSimJac,
  kPremention,
  kNumEntities,
  kNumMentions,
  kFullFrac,
  kMentionFrac,
  kTmatchY,
  kTmatchYm,
  kTmatchYmd,
  kAspectSim,
  kRelOpen,
  kRelSchema,
};

struct PlanItem {
  Field field;
  int aux = 0;
};

}  // namespace

void FeatureSchema::add(std::string name) {
  auto [it, inserted] = index_.emplace(name, names_.size());
  if (!inserted) throw ConfigError("duplicate feature name '" + name + "'");
  names_.push_back(std::move(name));
}

void FeatureSchema::add_onehot(const std::string& prefix,
                               const std::vector<std::string>& values) {
  std::vector<std::size_t> group;
  for (const auto& value : values) {
    group.push_back(names_.size());
    add(prefix + "=" + value);
  }
  groups_.push_back(std::move(group));
}

std::size_t FeatureSchema::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw ConfigError("unknown feature '" + name + "'");
  return it->second;
}

std::uint64_t FeatureSchema::fingerprint() const {
  std::string joined;
  for (const auto& name : names_) {
    joined += name;
    joined += '\n';
  }
  return fnv1a(joined);
}

namespace {

std::vector<std::string> to_strings(const auto& views) {
  std::vector<std::string> out;
  for (auto v : views) out.emplace_back(v);
  return out;
}

}  // namespace

FeatureSchema FeatureSchema::basic() {
  FeatureSchema schema;
  schema.add_onehot("SRC", to_strings(kSources));
  schema.add_onehot("LANG", to_strings(kLanguageVocabulary));
  schema.add("REL");
  schema.add("DOCREL");
  schema.add("NUMFULL");
  schema.add("NUMPARTIAL");
  schema.add("FPOSFULL");
  schema.add("LPOSPART");
  schema.add("SPRPOS");
  schema.add("SIM_cos");
  schema.add("SIM_jac");
  for (int h = 1; h <= 10; ++h) schema.add("PREMENTION_" + std::to_string(h));
  return schema;
}

FeatureSchema FeatureSchema::full(const AspectModel& aspects, const PatternCatalog& catalog) {
  FeatureSchema schema;
  schema.add_onehot("SRC", to_strings(kSources));
  schema.add_onehot("LANG", to_strings(kLanguageVocabulary));
  schema.add("DOCLEN_chunk");
  schema.add("DOCLEN_sent");
  schema.add_onehot("ENTITYTYPE", {"PER", "ORG", "FAC"});
  schema.add_onehot("PROFILETYPE", {"wiki", "web", "null"});
  schema.add("PROFILELEN");
  schema.add("REL");
  schema.add("DOCREL");
  schema.add("NUMFULL");
  schema.add("NUMPARTIAL");
  schema.add("FPOSFULL");
  schema.add("LPOSFULL");
  schema.add("LPOSPART");
  schema.add("SPRPOS");
  schema.add("FPOSFULL_N");
  schema.add("LPOSFULL_N");
  schema.add("SPRPOS_N");
  schema.add("LSPRFULL_N");
  schema.add("NUMSENT");
  schema.add("SIM_cos");
  schema.add("SIM_jac");
  for (int h = 1; h <= 10; ++h) schema.add("PREMENTION_" + std::to_string(h));
  schema.add("NUMENTITIES");
  schema.add("NUMMENTIONS");
  schema.add("FULLFRAC");
  schema.add("MENTIONFRAC");
  schema.add("TMATCH_Y");
  schema.add("TMATCH_YM");
  schema.add("TMATCH_YMD");
  for (const auto& aspect : aspects.aspects) schema.add("ASPECTSIM_" + dashed(aspect.heading_key));
  for (const auto& group : catalog.patterns) schema.add("RELOPEN_" + dashed(group.lemma_key));
  for (auto type : kAceRelationTypes) schema.add("RELSCHEMA_" + std::string(type));
  return schema;
}

FeatureSchema FeatureSchema::from_names(std::vector<std::string> names) {
  FeatureSchema schema;
  for (auto& name : names) schema.add(std::move(name));
  return schema;
}

FeatureVector project(const FeatureSchema& source, const FeatureVector& vec,
                      const FeatureSchema& target) {
  if (vec.values.size() != source.size())
    throw ConfigError("vector length does not match source schema");
  FeatureVector out;
  out.values.reserve(target.size());
  for (const auto& name : target.names()) out.values.push_back(vec.values[source.index_of(name)]);
  return out;
}

std::int64_t MentionHistory::bucket_of(std::int64_t stream_time) {
  std::int64_t q = stream_time / 3600;
  if (stream_time % 3600 < 0) --q;  // floor division for pre-epoch times
  return q;
}

void MentionHistory::add(const std::string& entity_id, std::int64_t bucket, std::int64_t count) {
  if (count <= 0) return;
  counts_[entity_id][bucket] += count;
}

std::int64_t MentionHistory::window_count(const std::string& entity_id, std::int64_t doc_bucket,
                                          int hours) const {
  auto it = counts_.find(entity_id);
  if (it == counts_.end() || hours <= 0) return 0;
  const auto& buckets = it->second;
  std::int64_t total = 0;
  auto lo = buckets.lower_bound(doc_bucket - hours);
  for (; lo != buckets.end() && lo->first < doc_bucket; ++lo) total += lo->second;
  return total;
}

MentionHistory build_mention_history(const std::vector<Document>& stream,
                                     const Registry& registry) {
  MentionHistory history;
  std::vector<AliasIndex> indexes;
  indexes.reserve(registry.size());
  for (const auto& topic : registry.topics()) indexes.emplace_back(topic);

  bool have_prev = false;
  std::int64_t prev_time = 0;
  std::string prev_id;
  for (const auto& doc : stream) {
    if (have_prev && doc.stream_time < prev_time)
      throw OrderingError("stream is not chronological: '" + doc.doc_id + "' precedes '" +
                          prev_id + "'");
    have_prev = true;
    prev_time = doc.stream_time;
    prev_id = doc.doc_id;

    TokenizedDoc tokens = analyze(doc);
    const std::int64_t bucket = MentionHistory::bucket_of(doc.stream_time);
    for (std::size_t i = 0; i < indexes.size(); ++i) {
      MentionStats stats = indexes[i].find_mentions(tokens);
      std::int64_t total = static_cast<std::int64_t>(stats.num_full + stats.num_partial);
      if (total > 0) history.add(registry.topics()[i].entity_id, bucket, total);
    }
  }
  return history;
}

UtcDate utc_date_of(std::int64_t seconds_since_epoch) {
  std::int64_t days = seconds_since_epoch / 86400;
  if (seconds_since_epoch % 86400 < 0) --days;
  // Civil-from-days conversion for the proleptic Gregorian calendar.
  std::int64_t z = days + 719468;
  std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  std::int64_t doe = z - era * 146097;
  std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  std::int64_t y = yoe + era * 400;
  std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  std::int64_t mp = (5 * doy + 2) / 153;
  std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
  std::int64_t m = mp < 10 ? mp + 3 : mp - 9;
  y += (m <= 2);
  return UtcDate{static_cast<int>(y), static_cast<int>(m), static_cast<int>(d)};
}

TimelinessCounts extract_timeliness(const Document& doc, const TokenizedDoc& tokens) {
  TimelinessCounts counts;
  const UtcDate date = utc_date_of(doc.stream_time);
  const std::string year_token = std::to_string(date.year);
  if (year_token.size() != 4) return counts;  // outside the 4-digit-year era

  const auto scalars = decode_scalars(doc.text);
  auto separator_adjacent = [&](const Token& tok) {
    if (tok.begin > 0) {
      std::uint32_t c = scalars[tok.begin - 1];
      if (c == '-' || c == '/') return true;
    }
    if (tok.end < scalars.size()) {
      std::uint32_t c = scalars[tok.end];
      if (c == '-' || c == '/') return true;
    }
    return false;
  };

  auto is_month_token = [&](const Token& tok) {
    const std::string& t = tok.text;
    if (t == kMonthNames[date.month - 1] || t == kMonthAbbrev[date.month - 1]) return true;
    if (all_digits(t) && t.size() <= 2 && std::stoi(t) == date.month)
      return separator_adjacent(tok);
    return false;
  };

  auto is_day_token = [&](const Token& tok) {
    std::string_view t = tok.text;
    std::size_t digits = 0;
    while (digits < t.size() && t[digits] >= '0' && t[digits] <= '9') ++digits;
    if (digits == 0 || digits > 2) return false;
    std::string_view suffix = t.substr(digits);
    if (!suffix.empty() && suffix != "st" && suffix != "nd" && suffix != "rd" && suffix != "th")
      return false;
    int value = 0;
    for (std::size_t i = 0; i < digits; ++i) value = value * 10 + (t[i] - '0');
    return value == date.day;
  };

  for (const auto& tok : tokens.tokens)
    if (tok.text == year_token) ++counts.year;

  for (const auto& [first, last] : tokens.sentence_token_ranges) {
    bool has_year = false, has_month = false, has_day = false;
    for (std::size_t i = first; i < last; ++i) {
      const Token& tok = tokens.tokens[i];
      if (tok.text == year_token) has_year = true;
      if (is_month_token(tok)) has_month = true;
      if (is_day_token(tok)) has_day = true;
    }
    if (has_year && has_month) {
      ++counts.year_month;
      if (has_day) ++counts.year_month_day;
    }
  }
  return counts;
}

TimelinessCounts extract_timeliness(const Document& doc) {
  return extract_timeliness(doc, analyze(doc));
}

bool is_valid_raw_label(std::string_view label) {
  for (auto l : kRawLabels)
    if (l == label) return true;
  return false;
}

namespace {

std::vector<PlanItem> build_plan(const FeatureSchema& schema, const AspectModel* aspects,
                                 const PatternCatalog* catalog) {
  std::unordered_map<std::string, int> aspect_index;
  if (aspects)
    for (std::size_t k = 0; k < aspects->aspects.size(); ++k)
      aspect_index["ASPECTSIM_" + dashed(aspects->aspects[k].heading_key)] = static_cast<int>(k);
  std::unordered_map<std::string, int> pattern_index;
  if (catalog)
    for (std::size_t k = 0; k < catalog->patterns.size(); ++k)
      pattern_index["RELOPEN_" + dashed(catalog->patterns[k].lemma_key)] = static_cast<int>(k);

  auto value_index = [](std::string_view name, std::string_view prefix,
                        const auto& values) -> int {
    std::string_view value = name.substr(prefix.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == value) return static_cast<int>(i);
    return -1;
  };

  std::vector<PlanItem> plan;
  plan.reserve(schema.size());
  for (const auto& name : schema.names()) {
    PlanItem item;
    if (name.starts_with("SRC=")) {
      item = {Field::kSrcOneHot, value_index(name, "SRC=", kSources)};
    } else if (name.starts_with("LANG=")) {
      item = {Field::kLangOneHot, value_index(name, "LANG=", kLanguageVocabulary)};
    } else if (name.starts_with("ENTITYTYPE=")) {
      constexpr std::array<std::string_view, 3> entity_types = {"PER", "ORG", "FAC"};
      item = {Field::kEntityTypeOneHot, value_index(name, "ENTITYTYPE=", entity_types)};
    } else if (name.starts_with("PROFILETYPE=")) {
      constexpr std::array<std::string_view, 3> kinds = {"wiki", "web", "null"};
      item = {Field::kProfileTypeOneHot, value_index(name, "PROFILETYPE=", kinds)};
    } else if (name == "DOCLEN_chunk") {
      item = {Field::kDoclenChunk};
    } else if (name == "DOCLEN_sent") {
      item = {Field::kDoclenSent};
    } else if (name == "PROFILELEN") {
      item = {Field::kProfileLen};
    } else if (name == "REL") {
      item = {Field::kRel};
    } else if (name == "DOCREL") {
      item = {Field::kDocRel};
    } else if (name == "NUMFULL") {
      item = {Field::kNumFull};
    } else if (name == "NUMPARTIAL") {
      item = {Field::kNumPartial};
    } else if (name == "FPOSFULL") {
      item = {Field::kFposFull};
    } else if (name == "LPOSFULL") {
      item = {Field::kLposFull};
    } else if (name == "LPOSPART") {
      item = {Field::kLposPart};
    } else if (name == "SPRPOS") {
      item = {Field::kSprPos};
    } else if (name == "FPOSFULL_N") {
      item = {Field::kFposFullN};
    } else if (name == "LPOSFULL_N") {
      item = {Field::kLposFullN};
    } else if (name == "SPRPOS_N") {
      item = {Field::kSprPosN};
    } else if (name == "LSPRFULL_N") {
      item = {Field::kLsprFullN};
    } else if (name == "NUMSENT") {
      item = {Field::kNumSent};
    } else if (name == "SIM_cos") {
      item = {Field::kSimCos};
    } else if (name == "SIM_jac") {
      item = {Field::kSimJac};
    } else if (name.starts_with("PREMENTION_")) {
      int h = static_cast<int>(parse_int(std::string_view(name).substr(11)));
      if (h < 1 || h > 10) throw ConfigError("unsupported feature '" + name + "'");
      item = {Field::kPremention, h};
    } else if (name == "NUMENTITIES") {
      item = {Field::kNumEntities};
    } else if (name == "NUMMENTIONS") {
      item = {Field::kNumMentions};
    } else if (name == "FULLFRAC") {
      item = {Field::kFullFrac};
    } else if (name == "MENTIONFRAC") {
      item = {Field::kMentionFrac};
    } else if (name == "TMATCH_Y") {
      item = {Field::kTmatchY};
    } else if (name == "TMATCH_YM") {
      item = {Field::kTmatchYm};
    } else if (name == "TMATCH_YMD") {
      item = {Field::kTmatchYmd};
    } else if (name.starts_with("ASPECTSIM_")) {
      auto it = aspect_index.find(name);
      if (it == aspect_index.end())
        throw ConfigError("schema names '" + name + "' but the aspect model does not contain it");
      item = {Field::kAspectSim, it->second};
    } else if (name.starts_with("RELOPEN_")) {
      auto it = pattern_index.find(name);
      if (it == pattern_index.end())
        throw ConfigError("schema names '" + name +
                          "' but the pattern catalog does not contain it");
      item = {Field::kRelOpen, it->second};
    } else if (name.starts_with("RELSCHEMA_")) {
      int idx = ace_relation_index(std::string_view(name).substr(10));
      if (idx < 0) throw ConfigError("unsupported feature '" + name + "'");
      item = {Field::kRelSchema, idx};
    } else {
      throw ConfigError("unsupported feature '" + name + "'");
    }
    if ((item.field == Field::kSrcOneHot || item.field == Field::kLangOneHot ||
         item.field == Field::kEntityTypeOneHot || item.field == Field::kProfileTypeOneHot) &&
        item.aux < 0)
      throw ConfigError("unsupported feature '" + name + "'");
    plan.push_back(item);
  }

  // The schema must consume every aspect/pattern component, not a subset;
  // otherwise the configured m/n and the resource files disagree.
  std::size_t aspect_uses = 0, pattern_uses = 0;
  for (const auto& item : plan) {
    if (item.field == Field::kAspectSim) ++aspect_uses;
    if (item.field == Field::kRelOpen) ++pattern_uses;
  }
  if (aspects && aspect_uses != aspects->aspects.size())
    throw ConfigError("schema uses " + std::to_string(aspect_uses) + " of " +
                      std::to_string(aspects->aspects.size()) + " aspects");
  if (!aspects && aspect_uses > 0)
    throw ConfigError("schema has ASPECTSIM features but no aspect model was given");
  if (catalog && pattern_uses != catalog->patterns.size())
    throw ConfigError("schema uses " + std::to_string(pattern_uses) + " of " +
                      std::to_string(catalog->patterns.size()) + " pattern groups");
  if (!catalog && pattern_uses > 0)
    throw ConfigError("schema has RELOPEN features but no pattern catalog was given");
  return plan;
}

}  // namespace

struct FeatureExtractor::Plan {
  std::vector<PlanItem> items;
};

FeatureExtractor::FeatureExtractor(const FeatureSchema& schema, const AspectModel* aspects,
                                   const PatternCatalog* catalog, const Registry& registry,
                                   PatternMatchMode pattern_mode)
    : schema_(schema),
      aspects_(aspects),
      catalog_(catalog),
      registry_(registry),
      pattern_mode_(pattern_mode),
      plan_(std::make_unique<Plan>(Plan{build_plan(schema, aspects, catalog)})) {}

FeatureExtractor::~FeatureExtractor() = default;

const AliasIndex& FeatureExtractor::alias_index(const EntityTopic& topic) const {
  auto it = alias_cache_.find(topic.entity_id);
  if (it == alias_cache_.end())
    it = alias_cache_.emplace(topic.entity_id, std::make_unique<AliasIndex>(topic)).first;
  return *it->second;
}

FeatureExtractor::DocContext FeatureExtractor::make_context(const Document& doc) const {
  DocContext ctx;
  ctx.doc = &doc;
  ctx.tokens = analyze(doc);
  if (aspects_) ctx.aspect_sims = aspect_similarities(ctx.tokens.terms, *aspects_);
  if (catalog_) ctx.open_relations = count_open_relations(ctx.tokens, *catalog_, pattern_mode_);
  ctx.schema_relations = count_schema_relations(doc);
  ctx.timeliness = extract_timeliness(doc, ctx.tokens);

  // Chunks: maximal runs of non-stopword tokens.
  std::size_t chunks = 0;
  bool in_run = false;
  for (const auto& tok : ctx.tokens.tokens) {
    if (is_stopword(tok.text)) {
      in_run = false;
    } else if (!in_run) {
      ++chunks;
      in_run = true;
    }
  }
  ctx.doclen_chunk = static_cast<double>(chunks);

  std::set<std::string> surfaces;
  for (const auto& mention : doc.mentions) {
    std::string normalized;
    for (const auto& t : tokenize(mention.surface)) {
      if (!normalized.empty()) normalized.push_back(' ');
      normalized += t;
    }
    surfaces.insert(normalized);
  }
  ctx.num_entities = static_cast<double>(surfaces.size());
  ctx.num_mentions = static_cast<double>(doc.mentions.size());
  return ctx;
}

FeatureVector FeatureExtractor::extract(const DocContext& ctx, const EntityTopic& topic,
                                        const MentionHistory& history) const {
  const auto& plan = plan_->items;
  const Document& doc = *ctx.doc;

  const MentionStats stats = alias_index(topic).find_mentions(ctx.tokens);
  const ProfileFeatures prof = profile_features(topic);
  const TermBag profile_terms = term_bag(topic.profile.text);
  const double sim_cos = cosine(ctx.tokens.terms, profile_terms);
  const double sim_jac = jaccard(ctx.tokens.terms, profile_terms);

  // Related entities with any canonical-name token (length >= 2, not a
  // stopword) present in the document. Unresolvable ids are skipped.
  double doc_rel = 0;
  for (const auto& related_id : topic.related_entities) {
    const EntityTopic* related = registry_.find(related_id);
    if (!related) continue;
    bool present = false;
    for (const auto& tok : tokenize(related->canonical_name)) {
      if (utf8_length(tok) < 2 || is_stopword(tok)) continue;
      if (ctx.tokens.terms.count(tok)) {
        present = true;
        break;
      }
    }
    if (present) ++doc_rel;
  }

  const std::int64_t bucket = MentionHistory::bucket_of(doc.stream_time);
  std::array<double, 11> premention{};  // index by h
  for (int h = 1; h <= 10; ++h)
    premention[h] = static_cast<double>(history.window_count(topic.entity_id, bucket, h));

  const double num_mentions = ctx.num_mentions;
  const double full_frac =
      num_mentions > 0 ? std::min(1.0, static_cast<double>(stats.num_full) / num_mentions) : 0.0;
  const double mention_frac =
      num_mentions > 0
          ? std::min(1.0, static_cast<double>(stats.num_full + stats.num_partial) / num_mentions)
          : 0.0;

  const int src_idx = source_index(doc.source);
  int lang_idx = -1;
  for (std::size_t i = 0; i + 1 < kLanguageVocabulary.size(); ++i)
    if (kLanguageVocabulary[i] == doc.language) lang_idx = static_cast<int>(i);
  if (lang_idx < 0) lang_idx = static_cast<int>(kLanguageVocabulary.size()) - 1;  // OTHER

  const int entity_type_idx = static_cast<int>(topic.entity_type);
  const int profile_kind_idx = static_cast<int>(prof.profile_kind);

  FeatureVector vec;
  vec.values.reserve(plan.size());
  for (const auto& item : plan) {
    double value = 0;
    switch (item.field) {
      case Field::kSrcOneHot: value = (item.aux == src_idx) ? 1 : 0; break;
      case Field::kLangOneHot: value = (item.aux == lang_idx) ? 1 : 0; break;
      case Field::kDoclenChunk: value = ctx.doclen_chunk; break;
      case Field::kDoclenSent: value = static_cast<double>(doc.sentences.size()); break;
      case Field::kEntityTypeOneHot: value = (item.aux == entity_type_idx) ? 1 : 0; break;
      case Field::kProfileTypeOneHot: value = (item.aux == profile_kind_idx) ? 1 : 0; break;
      case Field::kProfileLen: value = static_cast<double>(prof.profile_len); break;
      case Field::kRel: value = static_cast<double>(prof.related_count); break;
      case Field::kDocRel: value = doc_rel; break;
      case Field::kNumFull: value = static_cast<double>(stats.num_full); break;
      case Field::kNumPartial: value = static_cast<double>(stats.num_partial); break;
      case Field::kFposFull: value = static_cast<double>(stats.fpos_full); break;
      case Field::kLposFull: value = static_cast<double>(stats.lpos_full); break;
      case Field::kLposPart: value = static_cast<double>(stats.lpos_part); break;
      case Field::kSprPos: value = static_cast<double>(stats.spread); break;
      case Field::kFposFullN: value = stats.fpos_full_n; break;
      case Field::kLposFullN: value = stats.lpos_full_n; break;
      case Field::kSprPosN: value = stats.spread_n; break;
      case Field::kLsprFullN: value = stats.spread_full_n; break;
      case Field::kNumSent: value = static_cast<double>(stats.num_sent); break;
      case Field::kSimCos: value = sim_cos; break;
      case Field::kSimJac: value = sim_jac; break;
      case Field::kPremention: value = premention[item.aux]; break;
      case Field::kNumEntities: value = ctx.num_entities; break;
      case Field::kNumMentions: value = ctx.num_mentions; break;
      case Field::kFullFrac: value = full_frac; break;
      case Field::kMentionFrac: value = mention_frac; break;
      case Field::kTmatchY: value = static_cast<double>(ctx.timeliness.year); break;
      case Field::kTmatchYm: value = static_cast<double>(ctx.timeliness.year_month); break;
      case Field::kTmatchYmd: value = static_cast<double>(ctx.timeliness.year_month_day); break;
      case Field::kAspectSim: value = ctx.aspect_sims[static_cast<std::size_t>(item.aux)]; break;
      case Field::kRelOpen:
        value = static_cast<double>(ctx.open_relations[static_cast<std::size_t>(item.aux)]);
        break;
      case Field::kRelSchema:
        value = static_cast<double>(ctx.schema_relations[static_cast<std::size_t>(item.aux)]);
        break;
    }
    vec.values.push_back(value);
  }
  return vec;
}

FeatureVector FeatureExtractor::extract(const Document& doc, const EntityTopic& topic,
                                        const MentionHistory& history) const {
  return extract(make_context(doc), topic, history);
}

void write_instances_tsv(const InstanceTable& table, const std::string& path) {
  std::string out;
  out += "entity_id\tdoc_id\tstream_time\traw_label";
  for (const auto& name : table.schema.names()) {
    out += '\t';
    out += name;
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.features.values.size() != table.schema.size())
      throw ConfigError("instance '" + row.entity_id + "/" + row.doc_id +
                        "' does not match the schema width");
    if (!is_valid_raw_label(row.raw_label))
      throw SchemaError("invalid raw label '" + row.raw_label + "'");
    out += row.entity_id;
    out += '\t';
    out += row.doc_id;
    out += '\t';
    out += std::to_string(row.stream_time);
    out += '\t';
    out += row.raw_label;
    for (double v : row.features.values) {
      out += '\t';
      out += format_double(v);
    }
    out += '\n';
  }
  write_file(path, out);
}

InstanceTable read_instances_tsv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty instance file " + path);
  auto header = split(line, '\t');
  if (header.size() < 4 || header[0] != "entity_id" || header[1] != "doc_id" ||
      header[2] != "stream_time" || header[3] != "raw_label")
    throw ParseError("bad instance header in " + path, 1);

  std::vector<std::string> names;
  for (std::size_t i = 4; i < header.size(); ++i) names.emplace_back(header[i]);
  InstanceTable table;
  table.schema = FeatureSchema::from_names(std::move(names));

  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != header.size())
      throw ParseError("expected " + std::to_string(header.size()) + " columns, found " +
                           std::to_string(fields.size()),
                       line_number);
    LabeledInstance row;
    row.entity_id = std::string(fields[0]);
    row.doc_id = std::string(fields[1]);
    row.stream_time = parse_int(fields[2]);
    row.raw_label = std::string(fields[3]);
    if (!is_valid_raw_label(row.raw_label))
      throw ParseError("invalid raw label '" + row.raw_label + "'", line_number);
    row.features.values.reserve(table.schema.size());
    for (std::size_t i = 4; i < fields.size(); ++i)
      row.features.values.push_back(parse_double(fields[i]));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace vitalfilter
