#include "vitalfilter/synthetic.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "vitalfilter/features.hpp"
#include "vitalfilter/rng.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

const std::vector<std::string>& first_names() {
  static const std::vector<std::string> pool = {
      "Anne",  "Bill",  "Carla", "David", "Erin",  "Frank", "Grace", "Henry", "Irene", "Jack",
      "Karen", "Leo",   "Mara",  "Nolan", "Olive", "Peter", "Quinn", "Rosa",  "Sam",   "Tessa",
      "Ursula", "Victor"};
  return pool;
}

const std::vector<std::string>& last_names() {
  static const std::vector<std::string> pool = {
      "Blairton", "Templeman", "Oberlin",  "Lindqvist", "Sturdee",  "Mangrum", "Brandel",
      "Hollowell", "Prather",  "Keatings", "Marsden",   "Dolen",    "Fenwick", "Garzon",
      "Hobbson",  "Ingram",    "Quiller",  "Radler",    "Selkirk",  "Tarver",  "Umber",
      "Vickery"};
  return pool;
}

const std::vector<std::string>& org_names() {
  static const std::vector<std::string> pool = {
      "Cascadia Holdings",  "Rainier Collective", "Harborview Trust",
      "Evergreen Cooperative", "Soundside Partners", "Larchmont Society"};
  return pool;
}

const std::vector<std::string>& fac_names() {
  static const std::vector<std::string> pool = {
      "Pioneer Bridgeworks", "Cedarvale Stadium", "Kingsmoor Arena", "Westgate Terminal"};
  return pool;
}

// People who are never filtering targets; they populate the background
// mention noise.
const std::vector<std::string>& bystander_names() {
  static const std::vector<std::string> pool = {
      "Gary Holtman",  "Mona Reyburn",  "Teddy Vance",   "Lena Crowder", "Omar Wexley",
      "Paula Jensen",  "Ray Calloway",  "Sonia Merrick", "Hugo Ballard", "Ivy Shelton",
      "Neil Farrow",   "Dora Whitman",  "Cole Banning",  "Faye Ostrow",  "Gil Harmon",
      "June Pelletier", "Kurt Swanney", "Lila Moreland", "Max Quigley",  "Nina Talbot"};
  return pool;
}

const std::vector<std::string>& cities() {
  static const std::vector<std::string> pool = {"Seattle",  "Tacoma",  "Olympia", "Spokane",
                                                "Everett",  "Bellevue", "Renton",  "Kirkland"};
  return pool;
}

struct AspectVocab {
  std::string heading;
  std::vector<std::string> words;
};

const std::vector<AspectVocab>& aspect_vocabs() {
  static const std::vector<AspectVocab> vocabs = {
      {"Career",
       {"coached", "championship", "season", "playoff", "roster", "tournament", "league",
        "victory", "standings", "trophy", "record", "finals"}},
      {"Early life",
       {"childhood", "hometown", "raised", "elementary", "neighborhood", "parents", "youngest",
        "sibling", "grandparents", "upbringing"}},
      {"Education",
       {"university", "degree", "graduated", "thesis", "scholarship", "campus", "faculty",
        "diploma", "coursework", "semester"}},
      {"Personal life",
       {"married", "spouse", "resides", "hobbies", "garden", "daughter", "son", "household",
        "anniversary", "retreat"}},
      {"Achievements",
       {"award", "medal", "honored", "prize", "recognition", "milestone", "citation",
        "distinction", "laureate", "accolade"}},
      {"Political career",
       {"senate", "election", "campaign", "legislature", "governor", "ballot", "caucus",
        "incumbent", "precinct", "statute"}},
      {"Filmography",
       {"film", "starring", "premiere", "role", "director", "screenplay", "casting", "trailer",
        "matinee", "production"}},
      {"Publications",
       {"journal", "paper", "research", "published", "volume", "editor", "monograph",
        "manuscript", "proceedings", "anthology"}},
      {"Controversy",
       {"lawsuit", "scandal", "allegations", "investigation", "subpoena", "hearing", "verdict",
        "settlement", "testimony", "inquiry"}},
      {"Community work",
       {"volunteer", "charity", "fundraiser", "shelter", "donation", "outreach", "mentoring",
        "foodbank", "cleanup", "benefit"}},
      {"References", {"archive", "website", "retrieved", "citation", "footnote", "source"}},
      {"Family",
       {"cousin", "nephew", "ancestry", "lineage", "heirloom", "matriarch", "patriarch",
        "descendant"}}};
  return vocabs;
}

const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> pool = {
      "meeting",   "regional", "update",   "council",  "budget",  "residents", "plan",
      "street",    "library",  "festival", "weather",  "traffic", "morning",   "afternoon",
      "committee", "schedule", "agency",   "bulletin", "survey",  "district",  "review",
      "notice",    "public",   "annual",   "quarter",  "report",  "office",    "project",
      "downtown",  "harbor",   "market",   "program",  "funding", "station",   "forum",
      "newsletter", "briefing", "agenda",  "sidewalk", "parkway"};
  return pool;
}

struct RelationTemplate {
  std::string phrase;    // must appear verbatim in phrases.tsv
  std::string ace_type;  // annotation emitted alongside the phrase
  enum class Object { kCity, kOrg, kPerson } object;
};

const std::vector<RelationTemplate>& relation_templates() {
  static const std::vector<RelationTemplate> templates = {
      {"was born in", "citizen-resident", RelationTemplate::Object::kCity},
      {"works for", "org-affiliation-employment", RelationTemplate::Object::kOrg},
      {"was appointed by", "org-affiliation-membership", RelationTemplate::Object::kOrg},
      {"moved to", "located-in", RelationTemplate::Object::kCity},
      {"signed with", "org-affiliation-employment", RelationTemplate::Object::kOrg},
      {"graduated from", "org-affiliation-membership", RelationTemplate::Object::kOrg},
      {"married", "person-social-family", RelationTemplate::Object::kPerson},
  };
  return templates;
}

std::vector<PhraseCount> make_phrase_counts() {
  // Surface variants of the planted relations plus distractor phrases; the
  // catalog groups the variants by lemma.
  return {
      {"was born in", 960},      {"is born in", 140},      {"works for", 820},
      {"worked for", 260},       {"working for", 90},      {"was appointed by", 410},
      {"is appointed by", 70},   {"moved to", 530},        {"moves to", 110},
      {"signed with", 390},      {"signs with", 80},       {"graduated from", 350},
      {"graduates from", 60},    {"married", 320},         {"marries", 50},
      {"is the mayor of", 300},  {"was the mayor of", 120}, {"lives in", 280},
      {"lived in", 90},          {"spoke at", 240},        {"speaks at", 40},
      {"donated to", 210},       {"is a member of", 520},  {"was a member of", 180},
      {"ran for", 160},          {"runs for", 60},         {"retired from", 150},
      {"founded", 340},          {"founds", 30},           {"joined", 310},
  };
}

struct SentencePiece {
  std::string text;
  bool is_mention = false;
  std::string ne_type;
};

// A sentence assembled piece by piece, with relation annotations attached to
// piece indices so they survive sentence reordering.
struct PendingSentence {
  std::vector<SentencePiece> pieces;
  struct Rel {
    std::string type;
    std::size_t arg1_piece;
    std::size_t arg2_piece;
  };
  std::vector<Rel> relations;

  void word(const std::string& w) { pieces.push_back({w, false, ""}); }
  void words(const std::vector<std::string>& ws) {
    for (const auto& w : ws) word(w);
  }
  std::size_t mention(const std::string& name, const std::string& ne_type) {
    pieces.push_back({name, true, ne_type});
    return pieces.size() - 1;
  }
};

// Renders sentences in order: pieces joined by spaces, "." appended, one
// span per sentence. ASCII only, so scalar offsets equal byte offsets.
void render_document(Document& doc, const std::vector<PendingSentence>& sentences) {
  std::size_t offset = 0;
  auto append = [&](const std::string& text) {
    doc.text += text;
    offset += text.size();
  };
  for (const auto& sentence : sentences) {
    if (sentence.pieces.empty()) continue;
    const std::size_t start = offset;
    std::vector<Span> piece_spans(sentence.pieces.size());
    for (std::size_t i = 0; i < sentence.pieces.size(); ++i) {
      if (i) append(" ");
      const auto& piece = sentence.pieces[i];
      piece_spans[i] = Span{offset, offset + piece.text.size()};
      if (piece.is_mention) {
        MentionAnnotation mention;
        mention.span = piece_spans[i];
        mention.surface = piece.text;
        mention.ne_type = piece.ne_type;
        doc.mentions.push_back(std::move(mention));
      }
      append(piece.text);
    }
    append(".");
    doc.sentences.push_back(Span{start, offset});
    for (const auto& rel : sentence.relations) {
      RelationAnnotation ann;
      ann.rel_type = rel.type;
      ann.arg1 = piece_spans[rel.arg1_piece];
      ann.arg2 = piece_spans[rel.arg2_piece];
      doc.relations.push_back(std::move(ann));
    }
    append(" ");
  }
  if (!doc.text.empty() && doc.text.back() == ' ') doc.text.pop_back();
}

std::string month_name(int month) {
  static const char* names[] = {"January", "February", "March",     "April",   "May",      "June",
                                "July",    "August",   "September", "October", "November",
                                "December"};
  return names[month - 1];
}

class Generator {
 public:
  explicit Generator(const SyntheticSpec& spec) : spec_(spec), rng_(spec.seed) {}

  SyntheticDataset run() {
    SyntheticDataset data;
    data.spec = spec_;
    make_topics(data);
    make_articles(data);
    data.phrase_counts = make_phrase_counts();
    make_corpus(data);
    return data;
  }

  // The label decides only the *intrinsic* content: aspect vocabulary, a
  // planted relation phrase with its schema annotation, creation-date
  // expressions, and how many unrelated entities crowd the document. Basic
  // quantities (how often and where the target is named, related-entity
  // token drops) are drawn from label-independent distributions so that the
  // vital signal lives in the intrinsic features.
  Document compose_document(const std::string& doc_id, std::int64_t stream_time,
                            const EntityTopic& topic, const std::string& raw_label,
                            const std::vector<EntityTopic>& topics) {
    Document doc;
    doc.doc_id = doc_id;
    doc.stream_time = stream_time;
    doc.source = std::string(kSources[pick(kSources.size())]);
    doc.language = "en";

    const UtcDate date = utc_date_of(stream_time);
    const std::string target_type(entity_type_name(topic.entity_type));
    const AspectVocab& vocab = aspect_vocab_for(topic);

    std::string partial_surface;
    for (const auto& tok : tokenize_with_spans(topic.canonical_name))
      if (!is_stopword(tok.text) && tok.text.size() >= 2)
        partial_surface = topic.canonical_name.substr(tok.begin, tok.end - tok.begin);

    const bool mentions_target = raw_label != "garbage" || chance(0.5);
    const std::size_t full_mentions = mentions_target ? 1 + pick(3) : 0;   // 1..3
    const std::size_t partial_mentions = mentions_target ? pick(3) : 0;    // 0..2
    std::size_t bystander_sentences;
    if (raw_label == "vital") bystander_sentences = 1 + pick(2);
    else if (raw_label == "useful") bystander_sentences = 3 + pick(3);
    else if (raw_label == "neutral") bystander_sentences = 4 + pick(4);
    else bystander_sentences = 5 + pick(4);
    const std::size_t quiet_sentences = 1 + pick(3);

    std::vector<PendingSentence> sentences;

    for (std::size_t m = 0; m < full_mentions; ++m) {
      PendingSentence s;
      const std::size_t target_piece = s.mention(topic.canonical_name, target_type);
      if (raw_label == "vital" && m == 0) {
        // Planted relation phrase, schema annotation, and the creation date.
        const auto& rel = relation_templates()[pick(relation_templates().size())];
        for (const auto& w : tokenize(rel.phrase)) s.word(w);
        std::string object, object_type;
        switch (rel.object) {
          case RelationTemplate::Object::kCity:
            object = sample(cities());
            object_type = "LOC";
            break;
          case RelationTemplate::Object::kOrg:
            object = sample(org_names());
            object_type = "ORG";
            break;
          case RelationTemplate::Object::kPerson:
            object = sample(bystander_names());
            object_type = "PER";
            break;
        }
        const std::size_t object_piece = s.mention(object, object_type);
        s.relations.push_back({rel.ace_type, target_piece, object_piece});
        s.word("on");
        s.word(month_name(date.month));
        s.word(std::to_string(date.day) + ",");
        s.word(std::to_string(date.year));
      } else if (raw_label == "vital") {
        s.word("announced");
        s.word(sample(vocab.words));
        s.word(sample(vocab.words));
        if (m == 1) {
          s.word("in");
          s.word(std::to_string(date.year));
        }
      } else {
        s.word("attended");
        s.word("the");
        s.word(sample(filler_words()));
        if (raw_label == "useful" && chance(0.5)) {
          s.word("in");
          s.word(std::to_string(date.year - 1));  // stale year, never a match
        }
      }
      sentences.push_back(std::move(s));
    }

    for (std::size_t p = 0; p < partial_mentions && !partial_surface.empty(); ++p) {
      PendingSentence s;
      s.word(partial_surface);
      s.word("also");
      s.word(sample(filler_words()));
      if (raw_label == "vital") s.word(sample(vocab.words));
      sentences.push_back(std::move(s));
    }

    if (raw_label == "vital") {
      for (int a = 0; a < 2; ++a) {
        PendingSentence s;
        s.word("The");
        for (int i = 0; i < 5; ++i) s.word(sample(vocab.words));
        s.word(sample(filler_words()));
        sentences.push_back(std::move(s));
      }
    } else if (raw_label == "useful" && chance(0.3)) {
      PendingSentence s;
      s.word("The");
      s.word(sample(vocab.words));
      s.word(sample(filler_words()));
      sentences.push_back(std::move(s));
    }

    // Same related-entity drop rate for every label.
    if (!topic.related_entities.empty() && chance(0.25)) {
      const EntityTopic* related = find_topic(topics, sample(topic.related_entities));
      if (related) {
        auto related_tokens = tokenize_with_spans(related->canonical_name);
        if (!related_tokens.empty()) {
          const auto& tok = related_tokens.back();
          PendingSentence s;
          s.word(related->canonical_name.substr(tok.begin, tok.end - tok.begin));
          s.word("praised");
          s.word("the");
          s.word(sample(filler_words()));
          sentences.push_back(std::move(s));
        }
      }
    }

    for (std::size_t b = 0; b < bystander_sentences; ++b) {
      PendingSentence s;
      s.word("The");
      s.word(sample(filler_words()));
      s.mention(sample(bystander_names()), "PER");
      s.word(sample(filler_words()));
      if (chance(0.3)) s.mention(sample(cities()), "LOC");
      s.word(sample(filler_words()));
      sentences.push_back(std::move(s));
    }
    for (std::size_t q = 0; q < quiet_sentences; ++q) {
      PendingSentence s;
      s.word("The");
      for (int i = 0; i < 3 + static_cast<int>(pick(3)); ++i) s.word(sample(filler_words()));
      sentences.push_back(std::move(s));
    }

    shuffle(sentences, rng_);
    render_document(doc, sentences);
    return doc;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  void make_topics(SyntheticDataset& data) {
    std::size_t person = 0, org = 0, fac = 0;
    for (std::size_t i = 0; i < spec_.entities; ++i) {
      EntityTopic topic;
      topic.entity_id = "E" + std::to_string(100 + i);
      const ProfileKind kind =
          i % 3 == 0 ? ProfileKind::kWiki : (i % 3 == 1 ? ProfileKind::kWeb : ProfileKind::kNull);
      if (i % 10 == 7 && org < org_names().size()) {
        topic.canonical_name = org_names()[org++];
        topic.entity_type = EntityType::kOrg;
      } else if (i % 10 == 9 && fac < fac_names().size()) {
        topic.canonical_name = fac_names()[fac++];
        topic.entity_type = EntityType::kFac;
      } else {
        topic.canonical_name = first_names()[person % first_names().size()] + " " +
                               last_names()[(person / first_names().size() + person) %
                                            last_names().size()];
        topic.entity_type = EntityType::kPer;
        ++person;
      }
      topic.aliases = {topic.canonical_name};
      topic.train_cutoff = cutoff_time();
      topic.profile.kind = kind;
      if (kind != ProfileKind::kNull) {
        const auto& vocab = aspect_vocabs()[i % aspect_vocabs().size()];
        std::string text = topic.canonical_name + " is known for";
        for (int w = 0; w < 18; ++w) text += " " + vocab.words[pick(vocab.words.size())];
        text += " in " + cities()[pick(cities().size())];
        topic.profile.text = text;
        topic.profile.timestamp = spec_.start_time - 86400;  // predates the stream
      }
      data.topics.push_back(std::move(topic));
    }
    for (std::size_t i = 0; i < data.topics.size(); ++i) {
      const std::size_t relations = 1 + pick(3);
      for (std::size_t r = 0; r < relations; ++r) {
        const std::size_t other = pick(data.topics.size());
        if (other == i) continue;
        auto& related = data.topics[i].related_entities;
        const std::string& id = data.topics[other].entity_id;
        if (std::find(related.begin(), related.end(), id) == related.end())
          related.push_back(id);
      }
    }
  }

  void make_articles(SyntheticDataset& data) {
    const auto& vocabs = aspect_vocabs();
    for (std::size_t a = 0; a < spec_.wiki_articles; ++a) {
      WikiArticle article;
      article.title = first_names()[pick(first_names().size())] + " " +
                      last_names()[pick(last_names().size())] + " (article " +
                      std::to_string(a) + ")";
      article.categories = {a % 9 == 8 ? "location" : "person"};
      // Common headings appear in nearly every article, rare ones in few.
      for (std::size_t v = 0; v < vocabs.size(); ++v) {
        const double keep = v < 3 ? 0.95 : (v < 7 ? 0.6 : 0.3);
        if (!chance(keep)) continue;
        std::string text;
        const int words = 18 + static_cast<int>(pick(12));
        for (int w = 0; w < words; ++w) {
          if (w) text += " ";
          text += chance(0.8) ? vocabs[v].words[pick(vocabs[v].words.size())]
                              : filler_words()[pick(filler_words().size())];
        }
        article.sections.emplace_back(vocabs[v].heading, text);
      }
      if (article.sections.empty())
        article.sections.emplace_back(vocabs[0].heading, vocabs[0].words[0]);
      data.articles.push_back(std::move(article));
    }
  }

  void make_corpus(SyntheticDataset& data) {
    for (std::size_t i = 0; i < spec_.documents; ++i) {
      const std::int64_t stream_time = spec_.start_time + static_cast<std::int64_t>(i) *
                                                              spec_.spacing;
      const EntityTopic& topic = data.topics[pick(data.topics.size())];
      const double roll = uniform_unit(rng_);
      const std::string raw_label =
          roll < 0.22 ? "vital" : (roll < 0.55 ? "useful" : (roll < 0.75 ? "neutral" : "garbage"));
      Document doc = compose_document("D" + std::to_string(10000 + i), stream_time, topic,
                                      raw_label, data.topics);
      validate_document(doc);
      data.judgments.add(topic.entity_id, doc.doc_id, raw_label);
      data.corpus.push_back(std::move(doc));
    }
  }

  const AspectVocab& aspect_vocab_for(const EntityTopic& topic) {
    // Stable theme per entity so vital documents about it share language.
    // The junk vocabularies (references, family) are never themes.
    return aspect_vocabs()[fnv1a(topic.entity_id) % (aspect_vocabs().size() - 2)];
  }

  const EntityTopic* find_topic(const std::vector<EntityTopic>& topics, const std::string& id) {
    for (const auto& t : topics)
      if (t.entity_id == id) return &t;
    return nullptr;
  }

  std::int64_t cutoff_time() const {
    return spec_.start_time +
           static_cast<std::int64_t>(spec_.documents / 2) * spec_.spacing;
  }

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(uniform_below(rng_, n)); }
  bool chance(double p) { return uniform_unit(rng_) < p; }
  template <typename T>
  const T& sample(const std::vector<T>& pool) {
    return pool[pick(pool.size())];
  }

  SyntheticSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace

SyntheticDataset generate_synthetic(const SyntheticSpec& spec) {
  Generator generator(spec);
  return generator.run();
}

std::vector<Document> generate_future_documents(const SyntheticDataset& dataset,
                                                std::size_t count, std::uint64_t seed) {
  SyntheticSpec spec = dataset.spec;
  spec.seed = seed;
  Generator generator(spec);
  std::int64_t last_time = dataset.corpus.empty() ? spec.start_time
                                                  : dataset.corpus.back().stream_time;
  std::vector<Document> docs;
  for (std::size_t i = 0; i < count; ++i) {
    const std::int64_t stream_time = last_time + static_cast<std::int64_t>(i + 1) * spec.spacing;
    const EntityTopic& topic =
        dataset.topics[static_cast<std::size_t>(uniform_below(generator.rng(),
                                                              dataset.topics.size()))];
    const double roll = uniform_unit(generator.rng());
    const std::string raw_label =
        roll < 0.22 ? "vital" : (roll < 0.55 ? "useful" : (roll < 0.75 ? "neutral" : "garbage"));
    Document doc = generator.compose_document("F" + std::to_string(90000 + i), stream_time, topic,
                                              raw_label, dataset.topics);
    validate_document(doc);
    docs.push_back(std::move(doc));
  }
  return docs;
}

SyntheticPaths write_synthetic(const SyntheticDataset& dataset, const std::string& dir) {
  std::filesystem::create_directories(dir);
  SyntheticPaths paths;
  paths.corpus = dir + "/corpus.jsonl";
  paths.topics = dir + "/topics.json";
  paths.judgments = dir + "/judgments.tsv";
  paths.articles = dir + "/articles.jsonl";
  paths.phrases = dir + "/phrases.tsv";

  write_corpus(dataset.corpus, paths.corpus);
  write_file(paths.topics, topics_to_json(dataset.topics));
  write_judgments(dataset.judgments, paths.judgments);

  std::string articles;
  for (const auto& article : dataset.articles) {
    articles += wiki_article_to_json_line(article);
    articles += '\n';
  }
  write_file(paths.articles, articles);

  std::string phrases;
  for (const auto& pc : dataset.phrase_counts) {
    phrases += pc.phrase;
    phrases += '\t';
    phrases += std::to_string(pc.count);
    phrases += '\n';
  }
  write_file(paths.phrases, phrases);
  return paths;
}

}  // namespace vitalfilter
