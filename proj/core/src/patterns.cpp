#include "vitalfilter/patterns.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/lemma.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

using ordered_json = nlohmann::ordered_json;

// Non-overlapping leftmost-first occurrences of any member sequence within
// one token window. Longer members are tried first at each position.
std::int64_t count_in_window(const std::vector<Token>& tokens, std::size_t first,
                             std::size_t last,
                             const std::vector<std::vector<std::string>>& members) {
  std::int64_t count = 0;
  std::size_t i = first;
  while (i < last) {
    bool matched = false;
    for (const auto& member : members) {
      if (member.empty() || i + member.size() > last) continue;
      bool ok = true;
      for (std::size_t k = 0; k < member.size(); ++k) {
        if (tokens[i + k].text != member[k]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        ++count;
        i += member.size();
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }
  return count;
}

std::vector<std::vector<std::string>> tokenized_members(const PatternGroup& group,
                                                        PatternMatchMode mode) {
  std::vector<std::vector<std::string>> members;
  if (mode == PatternMatchMode::kSurface) {
    for (const auto& surface : group.surface_forms) {
      auto toks = tokenize(surface);
      if (!toks.empty()) members.push_back(std::move(toks));
    }
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
  } else {
    auto toks = tokenize(group.lemma_key);
    if (!toks.empty()) members.push_back(std::move(toks));
  }
  return members;
}

}  // namespace

PatternCatalog build_pattern_catalog(const std::vector<PhraseCount>& phrases, std::size_t n) {
  if (n < 1) throw ConfigError("pattern catalog size must be >= 1");

  PatternCatalog catalog;
  catalog.requested = n;
  if (phrases.empty()) {
    catalog.warnings.push_back("no input phrases; catalog is empty");
    return catalog;
  }

  std::map<std::string, PatternGroup> groups;
  for (const auto& pc : phrases) {
    if (pc.count < 0)
      throw SchemaError("phrase '" + pc.phrase + "' has negative count");
    std::string key = lemmatize_phrase(pc.phrase);
    if (key.empty()) continue;
    auto& group = groups[key];
    group.lemma_key = key;
    group.agg_count += pc.count;
    if (std::find(group.surface_forms.begin(), group.surface_forms.end(), pc.phrase) ==
        group.surface_forms.end())
      group.surface_forms.push_back(pc.phrase);
  }

  std::vector<PatternGroup> ranked;
  ranked.reserve(groups.size());
  for (auto& [key, group] : groups) {
    std::sort(group.surface_forms.begin(), group.surface_forms.end());
    ranked.push_back(std::move(group));
  }
  std::sort(ranked.begin(), ranked.end(), [](const PatternGroup& a, const PatternGroup& b) {
    if (a.agg_count != b.agg_count) return a.agg_count > b.agg_count;
    return a.lemma_key < b.lemma_key;
  });

  if (ranked.size() > n) {
    ranked.resize(n);
  } else if (ranked.size() < n) {
    catalog.warnings.push_back("only " + std::to_string(ranked.size()) +
                               " pattern groups available (requested " + std::to_string(n) + ")");
  }
  catalog.patterns = std::move(ranked);
  return catalog;
}

std::vector<PhraseCount> read_phrase_counts(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<PhraseCount> phrases;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 2)
      throw ParseError("expected 'phrase<TAB>count'", line_number);
    PhraseCount pc;
    pc.phrase = std::string(fields[0]);
    pc.count = parse_int(fields[1]);
    phrases.push_back(std::move(pc));
  }
  return phrases;
}

std::string pattern_catalog_to_json(const PatternCatalog& catalog) {
  ordered_json j;
  j["requested"] = catalog.requested;
  ordered_json patterns = ordered_json::array();
  for (const auto& group : catalog.patterns) {
    ordered_json gj;
    gj["lemma_key"] = group.lemma_key;
    gj["surface_forms"] = group.surface_forms;
    gj["agg_count"] = group.agg_count;
    patterns.push_back(std::move(gj));
  }
  j["patterns"] = std::move(patterns);
  j["warnings"] = catalog.warnings;
  return j.dump(2) + "\n";
}

PatternCatalog pattern_catalog_from_json(const std::string& json_text) {
  PatternCatalog catalog;
  try {
    auto j = nlohmann::json::parse(json_text);
    catalog.requested = j.at("requested").get<std::size_t>();
    for (const auto& gj : j.at("patterns")) {
      PatternGroup group;
      group.lemma_key = gj.at("lemma_key").get<std::string>();
      for (const auto& s : gj.at("surface_forms"))
        group.surface_forms.push_back(s.get<std::string>());
      group.agg_count = gj.at("agg_count").get<std::int64_t>();
      catalog.patterns.push_back(std::move(group));
    }
    if (j.contains("warnings"))
      for (const auto& w : j.at("warnings")) catalog.warnings.push_back(w.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pattern catalog: ") + e.what());
  }
  return catalog;
}

void save_pattern_catalog(const PatternCatalog& catalog, const std::string& path) {
  write_file(path, pattern_catalog_to_json(catalog));
}

PatternCatalog load_pattern_catalog(const std::string& path) {
  return pattern_catalog_from_json(read_file(path));
}

std::vector<std::int64_t> count_open_relations(const TokenizedDoc& doc,
                                               const PatternCatalog& catalog,
                                               PatternMatchMode mode) {
  std::vector<std::int64_t> counts(catalog.size(), 0);
  if (catalog.patterns.empty()) return counts;

  std::vector<Token> lemma_tokens;
  const std::vector<Token>* tokens = &doc.tokens;
  if (mode == PatternMatchMode::kLemma) {
    lemma_tokens = doc.tokens;
    for (auto& t : lemma_tokens) t.text = lemmatize_token(t.text);
    tokens = &lemma_tokens;
  }

  for (std::size_t k = 0; k < catalog.patterns.size(); ++k) {
    auto members = tokenized_members(catalog.patterns[k], mode);
    if (members.empty()) continue;
    for (const auto& [first, last] : doc.sentence_token_ranges)
      counts[k] += count_in_window(*tokens, first, last, members);
  }
  return counts;
}

std::vector<std::int64_t> count_schema_relations(const Document& doc) {
  std::vector<std::int64_t> counts(kAceRelationTypes.size(), 0);

  auto inside_entity_mention = [&](const Span& arg) {
    for (const auto& mention : doc.mentions) {
      if (!mention.span.contains(arg)) continue;
      if (mention.ne_type == "PER" || mention.ne_type == "ORG" || mention.ne_type == "LOC")
        return true;
    }
    return false;
  };

  for (const auto& rel : doc.relations) {
    int idx = ace_relation_index(rel.rel_type);
    if (idx < 0)
      throw SchemaError("document " + doc.doc_id + ": unknown rel_type '" + rel.rel_type + "'");
    if (inside_entity_mention(rel.arg1) && inside_entity_mention(rel.arg2))
      ++counts[static_cast<std::size_t>(idx)];
  }
  return counts;
}

}  // namespace vitalfilter
