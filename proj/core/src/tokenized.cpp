#include "vitalfilter/tokenized.hpp"

namespace vitalfilter {

TokenizedDoc analyze(const Document& doc) {
  TokenizedDoc out;
  out.tokens = tokenize_with_spans(doc.text);
  out.sentence_spans = doc.sentences;
  out.token_sentence.assign(out.tokens.size(), -1);
  out.sentence_token_ranges.assign(doc.sentences.size(), {0, 0});

  // Sentences are sorted and non-overlapping; walk both lists once. A token
  // belongs to the sentence containing its first scalar.
  std::size_t sent = 0;
  bool sent_open = false;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    const Token& tok = out.tokens[i];
    while (sent < doc.sentences.size() && doc.sentences[sent].end <= tok.begin) {
      if (sent_open) out.sentence_token_ranges[sent].second = i;
      sent_open = false;
      ++sent;
    }
    if (sent < doc.sentences.size() && doc.sentences[sent].start <= tok.begin &&
        tok.begin < doc.sentences[sent].end) {
      if (!sent_open) {
        out.sentence_token_ranges[sent].first = i;
        sent_open = true;
      }
      out.sentence_token_ranges[sent].second = i + 1;
      out.token_sentence[i] = static_cast<int>(sent);
    }
  }

  std::vector<std::string> words;
  words.reserve(out.tokens.size());
  for (const auto& t : out.tokens) words.push_back(t.text);
  out.terms = term_bag(words, /*remove_stopwords=*/true);
  return out;
}

}  // namespace vitalfilter
