#ifndef VITALFILTER_TOKENIZED_HPP
#define VITALFILTER_TOKENIZED_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "vitalfilter/corpus.hpp"
#include "vitalfilter/text.hpp"

namespace vitalfilter {

// Token-level view of one document, computed once and shared by the mention
// matcher, pattern counter, and feature extractor. Token positions used
// throughout the library are indices into `tokens`.
struct TokenizedDoc {
  std::vector<Token> tokens;
  std::vector<Span> sentence_spans;          // copied from the document
  std::vector<int> token_sentence;           // sentence index per token, -1 if outside
  std::vector<std::pair<std::size_t, std::size_t>> sentence_token_ranges;  // [first, last)
  TermBag terms;                             // stopword-filtered term frequencies

  std::size_t token_count() const { return tokens.size(); }
};

TokenizedDoc analyze(const Document& doc);

}  // namespace vitalfilter

#endif  // VITALFILTER_TOKENIZED_HPP
