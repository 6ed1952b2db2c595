#include "vitalfilter/text.hpp"

#include <cctype>
#include <cmath>
#include <unordered_set>

#include "vitalfilter/errors.hpp"

namespace vitalfilter {

namespace {

inline bool is_ascii_alnum(unsigned char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

// Number of bytes in the UTF-8 sequence starting at lead byte c. Stray
// continuation or invalid lead bytes count as single scalars so that offsets
// stay well defined on dirty input.
inline std::size_t sequence_length(unsigned char c) {
  if (c < 0x80) return 1;
  if ((c & 0xE0) == 0xC0) return 2;
  if ((c & 0xF0) == 0xE0) return 3;
  if ((c & 0xF8) == 0xF0) return 4;
  return 1;
}

// The fixed stopword list. Versioned with the code; changing it changes
// every term bag, aspect model, and chunk count downstream.
const std::unordered_set<std::string_view>& stopwords() {
  static const std::unordered_set<std::string_view> words = {
      "a", "about", "above", "after", "again", "against", "all", "am", "an",
      "and", "any", "are", "as", "at", "be", "because", "been", "before",
      "being", "below", "between", "both", "but", "by", "can", "cannot",
      "could", "de", "did", "do", "does", "doing", "down", "during", "each",
      "few", "for", "from", "further", "had", "has", "have", "having", "he",
      "her", "here", "hers", "herself", "him", "himself", "his", "how", "i",
      "if", "in", "into", "is", "it", "its", "itself", "just", "la", "le",
      "me", "more", "most", "my", "myself", "no", "nor", "not", "now", "of",
      "off", "on", "once", "only", "or", "other", "ought", "our", "ours",
      "ourselves", "out", "over", "own", "same", "she", "should", "so",
      "some", "such", "than", "that", "the", "their", "theirs", "them",
      "themselves", "then", "there", "these", "they", "this", "those",
      "through", "to", "too", "under", "until", "up", "van", "very", "was",
      "we", "were", "what", "when", "where", "which", "while", "who", "whom",
      "why", "will", "with", "would", "you", "your", "yours", "yourself",
      "yourselves"};
  return words;
}

}  // namespace

std::size_t utf8_length(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size(); i += sequence_length(static_cast<unsigned char>(text[i])))
    ++count;
  return count;
}

std::string utf8_slice(std::string_view text, std::size_t begin, std::size_t end) {
  if (begin > end) throw SchemaError("slice begin > end");
  std::size_t scalar = 0, i = 0;
  std::size_t byte_begin = std::string_view::npos, byte_end = std::string_view::npos;
  while (true) {
    if (scalar == begin) byte_begin = i;
    if (scalar == end) {
      byte_end = i;
      break;
    }
    if (i >= text.size()) break;
    i += sequence_length(static_cast<unsigned char>(text[i]));
    ++scalar;
  }
  if (byte_begin == std::string_view::npos || byte_end == std::string_view::npos)
    throw SchemaError("slice out of range");
  return std::string(text.substr(byte_begin, byte_end - byte_begin));
}

std::vector<Token> tokenize_with_spans(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t scalar = 0, i = 0;
  Token current;
  bool open = false;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len = sequence_length(c);
    bool token_char = (c >= 0x80) ? true : is_ascii_alnum(c);
    if (token_char) {
      if (!open) {
        current = Token{std::string(), scalar, scalar};
        open = true;
      }
      if (c < 0x80) {
        current.text.push_back(ascii_lower(static_cast<char>(c)));
      } else {
        current.text.append(text.substr(i, len));
      }
      current.end = scalar + 1;
    } else if (open) {
      tokens.push_back(std::move(current));
      open = false;
    }
    i += len;
    ++scalar;
  }
  if (open) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& t : tokenize_with_spans(text)) out.push_back(std::move(t.text));
  return out;
}

bool is_stopword(std::string_view token) {
  return stopwords().count(token) > 0;
}

TermBag term_bag(const std::vector<std::string>& tokens, bool remove_stopwords) {
  TermBag bag;
  for (const auto& t : tokens) {
    if (remove_stopwords && is_stopword(t)) continue;
    bag[t] += 1.0;
  }
  return bag;
}

TermBag term_bag(std::string_view text, bool remove_stopwords) {
  return term_bag(tokenize(text), remove_stopwords);
}

double cosine(const TermBag& a, const TermBag& b) {
  if (a.empty() || b.empty()) return 0.0;
  double dot = 0.0, norm_a = 0.0, norm_b = 0.0;
  for (const auto& [term, w] : a) {
    norm_a += w * w;
    auto it = b.find(term);
    if (it != b.end()) dot += w * it->second;
  }
  for (const auto& [term, w] : b) norm_b += w * w;
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

double jaccard(const TermBag& a, const TermBag& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t shared = 0;
  for (const auto& [term, w] : a)
    if (b.count(term)) ++shared;
  std::size_t total = a.size() + b.size() - shared;
  return total == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(total);
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(ascii_lower(raw));
  }
  return out;
}

}  // namespace vitalfilter
