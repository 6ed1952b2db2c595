#ifndef VITALFILTER_LEMMA_HPP
#define VITALFILTER_LEMMA_HPP

#include <string>
#include <string_view>
#include <vector>

namespace vitalfilter {

// Deterministic rule-based English lemmatizer: an irregular-verb exception
// table plus suffix stripping (-ies/-es/-s, -ing, -ed) with undoubling and
// e-restoration fixups. Approximate on purpose; phrases that lemmatize to
// the same key are grouped together, which is all the pattern catalog needs.
std::string lemmatize_token(std::string_view token);

// Tokenizes with the shared tokenizer, lemmatizes each token, joins with
// single spaces.
std::string lemmatize_phrase(std::string_view phrase);

std::vector<std::string> lemmatize_tokens(const std::vector<std::string>& tokens);

}  // namespace vitalfilter

#endif  // VITALFILTER_LEMMA_HPP
