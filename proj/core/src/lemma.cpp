#include "vitalfilter/lemma.hpp"

#include <unordered_map>

#include "vitalfilter/text.hpp"

namespace vitalfilter {

namespace {

const std::unordered_map<std::string_view, std::string_view>& irregular_forms() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"am", "be"},       {"is", "be"},       {"are", "be"},      {"was", "be"},
      {"were", "be"},     {"been", "be"},     {"being", "be"},    {"has", "have"},
      {"had", "have"},    {"having", "have"}, {"does", "do"},     {"did", "do"},
      {"done", "do"},     {"doing", "do"},    {"went", "go"},     {"gone", "go"},
      {"goes", "go"},     {"made", "make"},   {"took", "take"},   {"taken", "take"},
      {"got", "get"},     {"gotten", "get"},  {"said", "say"},    {"came", "come"},
      {"knew", "know"},   {"known", "know"},  {"gave", "give"},   {"given", "give"},
      {"found", "find"},  {"thought", "think"}, {"told", "tell"}, {"became", "become"},
      {"left", "leave"},  {"felt", "feel"},   {"brought", "bring"}, {"began", "begin"},
      {"begun", "begin"}, {"kept", "keep"},   {"held", "hold"},   {"wrote", "write"},
      {"written", "write"}, {"stood", "stand"}, {"heard", "hear"}, {"meant", "mean"},
      {"met", "meet"},    {"ran", "run"},     {"paid", "pay"},    {"sat", "sit"},
      {"spoke", "speak"}, {"spoken", "speak"}, {"led", "lead"},   {"grew", "grow"},
      {"grown", "grow"},  {"lost", "lose"},   {"fell", "fall"},   {"fallen", "fall"},
      {"sent", "send"},   {"built", "build"}, {"drew", "draw"},   {"drawn", "draw"},
      {"broke", "break"}, {"broken", "break"}, {"spent", "spend"}, {"rose", "rise"},
      {"risen", "rise"},  {"drove", "drive"}, {"driven", "drive"}, {"bought", "buy"},
      {"wore", "wear"},   {"worn", "wear"},   {"chose", "choose"}, {"chosen", "choose"},
      {"won", "win"},     {"sold", "sell"},   {"saw", "see"},     {"seen", "see"},
      {"ate", "eat"},     {"eaten", "eat"},   {"lay", "lie"},
      {"lain", "lie"},    {"threw", "throw"}, {"thrown", "throw"}, {"caught", "catch"},
      {"taught", "teach"}, {"fought", "fight"}, {"bound", "bind"}, {"struck", "strike"},
      {"sought", "seek"}, {"flew", "fly"},    {"flown", "fly"},   {"laid", "lay"},
      {"men", "man"},     {"women", "woman"}, {"children", "child"}, {"people", "person"},
      {"feet", "foot"},   {"teeth", "tooth"}, {"lives", "life"},  {"wives", "wife"}};
  return table;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool has_vowel(std::string_view s) {
  for (char c : s)
    if (is_vowel(c)) return true;
  return false;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// After stripping -ing/-ed: restore a dropped final 'e' or undouble the
// final consonant (keep ll/ss/zz).
std::string fixup_stem(std::string stem) {
  if (ends_with(stem, "at") || ends_with(stem, "bl") || ends_with(stem, "iz") ||
      ends_with(stem, "us")) {
    stem.push_back('e');
    return stem;
  }
  if (stem.size() >= 2) {
    char last = stem[stem.size() - 1];
    char prev = stem[stem.size() - 2];
    if (last == prev && !is_vowel(last) && last != 'l' && last != 's' && last != 'z')
      stem.pop_back();
  }
  return stem;
}

}  // namespace

std::string lemmatize_token(std::string_view token) {
  auto it = irregular_forms().find(token);
  if (it != irregular_forms().end()) return std::string(it->second);

  std::string word(token);

  if (ends_with(word, "ing") && word.size() >= 6 &&
      has_vowel(std::string_view(word).substr(0, word.size() - 3)))
    return fixup_stem(word.substr(0, word.size() - 3));

  if (ends_with(word, "ied") && word.size() >= 5)
    return word.substr(0, word.size() - 3) + "y";
  if (ends_with(word, "ed") && word.size() >= 5 &&
      has_vowel(std::string_view(word).substr(0, word.size() - 2)))
    return fixup_stem(word.substr(0, word.size() - 2));

  if (ends_with(word, "ies") && word.size() >= 5)
    return word.substr(0, word.size() - 3) + "y";
  if (ends_with(word, "sses")) return word.substr(0, word.size() - 2);
  if (ends_with(word, "xes") || ends_with(word, "zes") || ends_with(word, "ches") ||
      ends_with(word, "shes") || ends_with(word, "oes"))
    return word.substr(0, word.size() - 2);
  if (ends_with(word, "s") && word.size() >= 4 && !ends_with(word, "ss") &&
      !ends_with(word, "us") && !ends_with(word, "is"))
    return word.substr(0, word.size() - 1);

  return word;
}

std::vector<std::string> lemmatize_tokens(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(lemmatize_token(t));
  return out;
}

std::string lemmatize_phrase(std::string_view phrase) {
  std::string out;
  for (const auto& tok : tokenize(phrase)) {
    if (!out.empty()) out.push_back(' ');
    out += lemmatize_token(tok);
  }
  return out;
}

}  // namespace vitalfilter
