#ifndef VITALFILTER_TEXT_HPP
#define VITALFILTER_TEXT_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vitalfilter {

// Shared tokenizer used by every module that touches text: lowercase, split
// on any character that is not a letter or digit, drop empty tokens. Offsets
// count Unicode scalar values, not bytes. Non-ASCII scalars are treated as
// letters; lowercasing is ASCII-only.

struct Token {
  std::string text;   // lowercased
  std::size_t begin;  // scalar offset, inclusive
  std::size_t end;    // scalar offset, exclusive
};

std::size_t utf8_length(std::string_view text);

// Substring in scalar offsets. Throws SchemaError when out of range.
std::string utf8_slice(std::string_view text, std::size_t begin, std::size_t end);

std::vector<Token> tokenize_with_spans(std::string_view text);
std::vector<std::string> tokenize(std::string_view text);

// Fixed in-repo English stopword list (see text.cpp).
bool is_stopword(std::string_view token);

// Term-frequency bag. std::map keeps iteration (and thus accumulation and
// serialization) order deterministic.
using TermBag = std::map<std::string, double>;

TermBag term_bag(const std::vector<std::string>& tokens, bool remove_stopwords = true);
TermBag term_bag(std::string_view text, bool remove_stopwords = true);

double cosine(const TermBag& a, const TermBag& b);
double jaccard(const TermBag& a, const TermBag& b);

// Lowercase, trim, collapse internal whitespace. Used for section headings
// and mention-surface normalization.
std::string normalize_whitespace(std::string_view text);

}  // namespace vitalfilter

#endif  // VITALFILTER_TEXT_HPP
