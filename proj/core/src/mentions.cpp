#include "vitalfilter/mentions.hpp"

#include <algorithm>

#include "vitalfilter/errors.hpp"

namespace vitalfilter {

namespace {

struct Match {
  std::size_t first_token;
  std::size_t last_token;  // inclusive
};

bool tokens_match_at(const std::vector<Token>& tokens, std::size_t pos,
                     const std::vector<std::string>& pattern) {
  if (pos + pattern.size() > tokens.size()) return false;
  for (std::size_t k = 0; k < pattern.size(); ++k)
    if (tokens[pos + k].text != pattern[k]) return false;
  return true;
}

}  // namespace

AliasIndex::AliasIndex(const EntityTopic& topic) {
  if (topic.canonical_name.empty())
    throw SchemaError("topic " + topic.entity_id + ": empty canonical name");
  auto canonical = tokenize(topic.canonical_name);
  if (canonical.empty())
    throw SchemaError("topic " + topic.entity_id + ": canonical name has no tokens");

  for (const auto& alias : topic.aliases) {
    auto toks = tokenize(alias);
    if (toks.empty()) continue;
    if (std::find(alias_tokens_.begin(), alias_tokens_.end(), toks) == alias_tokens_.end())
      alias_tokens_.push_back(std::move(toks));
  }
  // The matcher is leftmost-longest; longer aliases must be tried first.
  std::sort(alias_tokens_.begin(), alias_tokens_.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });

  canonical_sequence_ = canonical;
  for (const auto& tok : canonical) {
    canonical_tokens_.insert(tok);
    if (utf8_length(tok) >= 2 && !is_stopword(tok)) partial_tokens_.insert(tok);
  }
}

MentionStats AliasIndex::find_mentions(const TokenizedDoc& doc) const {
  const auto& tokens = doc.tokens;

  std::vector<Match> full;
  std::vector<char> covered(tokens.size(), 0);
  std::size_t i = 0;
  while (i < tokens.size()) {
    bool matched = false;
    for (const auto& alias : alias_tokens_) {
      if (tokens_match_at(tokens, i, alias)) {
        full.push_back({i, i + alias.size() - 1});
        for (std::size_t k = i; k < i + alias.size(); ++k) covered[k] = 1;
        i += alias.size();
        matched = true;
        break;
      }
    }
    if (!matched) ++i;
  }

  std::vector<std::size_t> partial;
  for (std::size_t j = 0; j < tokens.size(); ++j) {
    if (covered[j]) continue;
    if (partial_tokens_.count(tokens[j].text)) partial.push_back(j);
  }

  MentionStats stats;
  stats.num_full = full.size();
  stats.num_partial = partial.size();
  if (!full.empty()) {
    stats.fpos_full = static_cast<long>(full.front().first_token);
    stats.lpos_full = static_cast<long>(full.back().first_token);
    stats.spread_full = stats.lpos_full - stats.fpos_full;
  }
  if (!partial.empty()) stats.lpos_part = static_cast<long>(partial.back());

  // Spread runs over the union of full and partial mention positions.
  long first_any = -1, last_any = -1;
  if (!full.empty()) {
    first_any = static_cast<long>(full.front().first_token);
    last_any = static_cast<long>(full.back().first_token);
  }
  if (!partial.empty()) {
    long p_first = static_cast<long>(partial.front());
    long p_last = static_cast<long>(partial.back());
    first_any = first_any < 0 ? p_first : std::min(first_any, p_first);
    last_any = last_any < 0 ? p_last : std::max(last_any, p_last);
  }
  if (first_any >= 0) stats.spread = last_any - first_any;

  const double denom = static_cast<double>(doc.token_count());
  if (denom > 0) {
    if (stats.fpos_full >= 0) {
      stats.fpos_full_n = static_cast<double>(stats.fpos_full) / denom;
      stats.lpos_full_n = static_cast<double>(stats.lpos_full) / denom;
      stats.spread_full_n = static_cast<double>(stats.spread_full) / denom;
    }
    if (first_any >= 0) stats.spread_n = static_cast<double>(stats.spread) / denom;
  }

  // Sentences overlapping any mention span.
  std::set<int> sentences;
  auto mark = [&](std::size_t first_token, std::size_t last_token) {
    Span span{tokens[first_token].begin, tokens[last_token].end};
    for (std::size_t s = 0; s < doc.sentence_spans.size(); ++s)
      if (doc.sentence_spans[s].overlaps(span)) sentences.insert(static_cast<int>(s));
  };
  for (const auto& m : full) mark(m.first_token, m.last_token);
  for (std::size_t j : partial) mark(j, j);
  stats.num_sent = sentences.size();
  return stats;
}

double AliasIndex::name_fraction(const TokenizedDoc& doc) const {
  if (canonical_tokens_.empty()) return 0.0;
  std::size_t present = 0;
  for (const auto& tok : canonical_tokens_) {
    for (const auto& t : doc.tokens) {
      if (t.text == tok) {
        ++present;
        break;
      }
    }
  }
  return static_cast<double>(present) / static_cast<double>(canonical_tokens_.size());
}

bool AliasIndex::has_full_match(const TokenizedDoc& doc) const {
  for (std::size_t i = 0; i < doc.tokens.size(); ++i)
    for (const auto& alias : alias_tokens_)
      if (tokens_match_at(doc.tokens, i, alias)) return true;
  return false;
}

bool AliasIndex::passes_prefilter(const TokenizedDoc& doc) const {
  for (std::size_t i = 0; i < doc.tokens.size(); ++i)
    if (tokens_match_at(doc.tokens, i, canonical_sequence_)) return true;
  return false;
}

MentionStats find_mentions(const Document& doc, const EntityTopic& topic) {
  return AliasIndex(topic).find_mentions(analyze(doc));
}

double name_fraction(const Document& doc, const EntityTopic& topic) {
  return AliasIndex(topic).name_fraction(analyze(doc));
}

}  // namespace vitalfilter
