#include <doctest.h>

#include <random>

#include "oracle_helpers.hpp"
#include "vitalfilter/errors.hpp"
#include "vitalfilter/lemma.hpp"
#include "vitalfilter/patterns.hpp"
#include "vitalfilter/rng.hpp"

using namespace vitalfilter;

namespace {

Document sentence_doc(const std::vector<std::string>& sentences) {
  Document doc;
  doc.doc_id = "d";
  doc.stream_time = 0;
  doc.source = "news";
  doc.language = "en";
  for (const auto& s : sentences) {
    if (!doc.text.empty()) doc.text += " ";
    const std::size_t start = utf8_length(doc.text);
    doc.text += s;
    doc.sentences.push_back(Span{start, utf8_length(doc.text)});
  }
  return doc;
}

}  // namespace

TEST_CASE("lemmatizer rules") {
  CHECK(lemmatize_token("was") == "be");
  CHECK(lemmatize_token("is") == "be");
  CHECK(lemmatize_token("been") == "be");
  CHECK(lemmatize_token("works") == "work");
  CHECK(lemmatize_token("working") == "work");
  CHECK(lemmatize_token("worked") == "work");
  CHECK(lemmatize_token("coached") == "coach");
  CHECK(lemmatize_token("running") == "run");
  CHECK(lemmatize_token("falling") == "fall");
  CHECK(lemmatize_token("married") == "marry");
  CHECK(lemmatize_token("marries") == "marry");
  CHECK(lemmatize_token("watches") == "watch");
  CHECK(lemmatize_token("born") == "born");
  CHECK(lemmatize_token("in") == "in");
  CHECK(lemmatize_token("seattle") == "seattle");
  CHECK(lemmatize_phrase("Was Born In") == "be born in");
  CHECK(lemmatize_phrase("works for") == "work for");
}

TEST_CASE("catalog groups by lemma and aggregates counts") {
  auto catalog = build_pattern_catalog(
      {{"was born in", 10}, {"is born in", 5}, {"works for", 8}}, 1);
  REQUIRE(catalog.size() == 1);
  CHECK(catalog.patterns[0].lemma_key == "be born in");
  CHECK(catalog.patterns[0].agg_count == 15);
  CHECK(catalog.patterns[0].surface_forms ==
        std::vector<std::string>{"is born in", "was born in"});
}

TEST_CASE("n larger than the group count keeps all groups with a warning") {
  auto catalog = build_pattern_catalog({{"works for", 3}}, 10);
  CHECK(catalog.size() == 1);
  CHECK(catalog.requested == 10);
  REQUIRE(catalog.warnings.size() == 1);
}

TEST_CASE("equal aggregate counts break ties lexicographically") {
  auto catalog = build_pattern_catalog({{"zeta phrase", 5}, {"alpha phrase", 5}}, 2);
  REQUIRE(catalog.size() == 2);
  CHECK(catalog.patterns[0].lemma_key == "alpha phrase");
  CHECK(catalog.patterns[1].lemma_key == "zeta phrase");
}

TEST_CASE("empty input yields an empty catalog with a warning") {
  auto catalog = build_pattern_catalog({}, 5);
  CHECK(catalog.size() == 0);
  REQUIRE(catalog.warnings.size() == 1);
  CHECK_THROWS_AS(build_pattern_catalog({}, 0), ConfigError);
  CHECK_THROWS_AS(build_pattern_catalog({{"x", -1}}, 1), SchemaError);
}

TEST_CASE("open relation counting is per sentence") {
  auto catalog = build_pattern_catalog({{"was born in", 10}, {"is born in", 5}}, 1);

  SUBCASE("both surface variants count") {
    auto doc = sentence_doc({"He was born in Seattle.", "She is born in May."});
    auto counts = count_open_relations(analyze(doc), catalog);
    REQUIRE(counts.size() == 1);
    CHECK(counts[0] == 2);
  }
  SUBCASE("no pattern text gives a zero vector") {
    auto doc = sentence_doc({"Nothing to see."});
    CHECK(count_open_relations(analyze(doc), catalog) == std::vector<std::int64_t>{0});
  }
  SUBCASE("a match split across a sentence boundary does not count") {
    auto doc = sentence_doc({"He was born", "in Seattle."});
    CHECK(count_open_relations(analyze(doc), catalog) == std::vector<std::int64_t>{0});
  }
  SUBCASE("lemma-mode matches the lemmatized sentence") {
    auto doc = sentence_doc({"He was born in Seattle."});
    auto counts = count_open_relations(analyze(doc), catalog, PatternMatchMode::kLemma);
    CHECK(counts[0] == 1);
  }
}

TEST_CASE("vector length is fixed by the catalog regardless of content") {
  auto catalog = build_pattern_catalog({{"works for", 2}, {"moved to", 3}, {"lives in", 4}}, 3);
  auto doc = sentence_doc({"Unrelated text."});
  CHECK(count_open_relations(analyze(doc), catalog).size() == 3);
}

TEST_CASE("counts match the naive oracle and respect the overlap bound") {
  std::mt19937_64 rng(314);
  auto catalog =
      build_pattern_catalog({{"alpha beta", 5}, {"beta alpha", 4}, {"gamma", 3}}, 3);
  oracle::RandomDocConfig config;
  config.canonical = "Zed Zed";
  config.aliases = {"Zed Zed"};
  config.extra_words = {"alpha", "beta", "gamma", "delta", "other"};
  config.alias_rate = 0.0;

  for (int trial = 0; trial < 60; ++trial) {
    Document doc = oracle::random_document(rng, config, "d");
    auto counts = count_open_relations(analyze(doc), catalog);
    for (std::size_t k = 0; k < catalog.size(); ++k) {
      const long exact = oracle::open_relation_oracle(doc, catalog.patterns[k].surface_forms);
      const long upper =
          oracle::open_relation_overlap_oracle(doc, catalog.patterns[k].surface_forms);
      CHECK(counts[k] == exact);
      CHECK(counts[k] <= upper);
    }
  }
}

TEST_CASE("catalog build is input-order independent") {
  std::vector<PhraseCount> phrases = {{"was born in", 10}, {"is born in", 5},
                                      {"works for", 8},    {"worked for", 2},
                                      {"moved to", 7},     {"lives in", 7}};
  auto reference = pattern_catalog_to_json(build_pattern_catalog(phrases, 4));
  std::mt19937_64 rng(8);
  for (int perm = 0; perm < 3; ++perm) {
    shuffle(phrases, rng);
    CHECK(pattern_catalog_to_json(build_pattern_catalog(phrases, 4)) == reference);
  }
}

TEST_CASE("catalog JSON persistence round trip") {
  auto catalog = build_pattern_catalog({{"was born in", 10}, {"works for", 8}}, 2);
  auto loaded = pattern_catalog_from_json(pattern_catalog_to_json(catalog));
  CHECK(pattern_catalog_to_json(loaded) == pattern_catalog_to_json(catalog));
}

TEST_CASE("schema relation counting filters by mention type") {
  Document doc = sentence_doc({"Anne Blair works for Cascadia Holdings today.",
                               "Her cousin visited Seattle."});
  // Mentions: Anne Blair (PER), Cascadia Holdings (ORG), Seattle (OTHER).
  doc.mentions.push_back({Span{0, 10}, "Anne Blair", "PER"});
  doc.mentions.push_back({Span{21, 38}, "Cascadia Holdings", "ORG"});
  const std::size_t seattle = doc.text.find("Seattle");
  doc.mentions.push_back({Span{seattle, seattle + 7}, "Seattle", "OTHER"});

  doc.relations.push_back({"org-affiliation-employment", Span{0, 10}, Span{21, 38}});
  doc.relations.push_back({"org-affiliation-employment", Span{0, 10}, Span{21, 38}});
  doc.relations.push_back({"person-social-family", Span{0, 10}, Span{0, 10}});
  // arg2 lies in an OTHER-typed mention: filtered out.
  doc.relations.push_back({"located-in", Span{0, 10}, Span{seattle, seattle + 7}});

  auto counts = count_schema_relations(doc);
  REQUIRE(counts.size() == 15);
  CHECK(counts[static_cast<std::size_t>(ace_relation_index("org-affiliation-employment"))] == 2);
  CHECK(counts[static_cast<std::size_t>(ace_relation_index("person-social-family"))] == 1);
  CHECK(counts[static_cast<std::size_t>(ace_relation_index("located-in"))] == 0);

  auto ora = oracle::schema_relation_oracle(doc);
  for (std::size_t k = 0; k < counts.size(); ++k) CHECK(counts[k] == ora[k]);
}

TEST_CASE("no relation annotations gives a zero vector") {
  auto counts = count_schema_relations(sentence_doc({"Plain text."}));
  for (auto c : counts) CHECK(c == 0);
}
