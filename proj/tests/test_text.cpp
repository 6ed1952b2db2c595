#include <doctest.h>

#include <cmath>
#include <random>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/rng.hpp"
#include "vitalfilter/text.hpp"

using namespace vitalfilter;

TEST_CASE("tokenizer lowercases and splits on non-alphanumerics") {
  auto tokens = tokenize("Anne Blair met Bob.");
  CHECK(tokens == std::vector<std::string>{"anne", "blair", "met", "bob"});
  CHECK(tokenize("a-b/c_d").size() == 4);
  CHECK(tokenize("...").empty());
  CHECK(tokenize("").empty());
  CHECK(tokenize("ANNE  blair") == std::vector<std::string>{"anne", "blair"});
}

TEST_CASE("token spans are scalar offsets") {
  auto tokens = tokenize_with_spans("Anne Blair.");
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].begin == 0);
  CHECK(tokens[0].end == 4);
  CHECK(tokens[1].begin == 5);
  CHECK(tokens[1].end == 10);
}

TEST_CASE("utf8 handling counts scalars, not bytes") {
  const std::string text = "caf\xc3\xa9 bar";  // "café bar"
  CHECK(utf8_length(text) == 8);
  auto tokens = tokenize_with_spans(text);
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].text == "caf\xc3\xa9");
  CHECK(tokens[0].end == 4);
  CHECK(tokens[1].begin == 5);
  CHECK(utf8_slice(text, 0, 4) == "caf\xc3\xa9");
  CHECK(utf8_slice(text, 5, 8) == "bar");
  CHECK_THROWS_AS(utf8_slice(text, 5, 9), SchemaError);
}

TEST_CASE("stopword list") {
  CHECK(is_stopword("the"));
  CHECK(is_stopword("of"));
  CHECK(is_stopword("de"));
  CHECK_FALSE(is_stopword("anne"));
  CHECK_FALSE(is_stopword("career"));
}

TEST_CASE("term bags remove stopwords and count frequencies") {
  auto bag = term_bag("the coach coached the team");
  CHECK(bag.count("the") == 0);
  CHECK(bag.at("coach") == 1.0);
  CHECK(bag.at("coached") == 1.0);
  CHECK(bag.at("team") == 1.0);
  auto raw = term_bag("the the", /*remove_stopwords=*/false);
  CHECK(raw.at("the") == 2.0);
}

TEST_CASE("cosine on hand-checked vectors") {
  TermBag doc{{"coached", 1.0}};
  TermBag aspect{{"coached", 2.0}, {"football", 1.0}};
  CHECK(cosine(doc, aspect) == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-12));
  CHECK(cosine(doc, doc) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine(doc, TermBag{{"other", 3.0}}) == 0.0);
  CHECK(cosine(TermBag{}, aspect) == 0.0);
}

TEST_CASE("jaccard") {
  TermBag a{{"x", 1.0}, {"y", 2.0}};
  TermBag b{{"y", 5.0}, {"z", 1.0}};
  CHECK(jaccard(a, b) == doctest::Approx(1.0 / 3.0));
  CHECK(jaccard(a, a) == 1.0);
  CHECK(jaccard(TermBag{}, TermBag{}) == 0.0);
}

TEST_CASE("cosine is scale invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    TermBag a, b;
    for (int i = 0; i < 8; ++i) {
      a["t" + std::to_string(uniform_below(rng, 12))] += 1.0 + double(uniform_below(rng, 5));
      b["t" + std::to_string(uniform_below(rng, 12))] += 1.0 + double(uniform_below(rng, 5));
    }
    const double scale = 1.0 + double(uniform_below(rng, 9));
    TermBag scaled = a;
    for (auto& [k, v] : scaled) v *= scale;
    CHECK(cosine(a, b) == doctest::Approx(cosine(scaled, b)).epsilon(1e-12));
  }
}

TEST_CASE("normalize_whitespace") {
  CHECK(normalize_whitespace("  Early   Life \t") == "early life");
  CHECK(normalize_whitespace("Career") == "career");
  CHECK(normalize_whitespace(" \t ") == "");
}
