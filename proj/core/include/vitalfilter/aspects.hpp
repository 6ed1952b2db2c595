#ifndef VITALFILTER_ASPECTS_HPP
#define VITALFILTER_ASPECTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vitalfilter/text.hpp"

namespace vitalfilter {

struct WikiArticle {
  std::string title;
  std::vector<std::string> categories;
  // Ordered (heading, text) pairs; headings must be non-empty after trimming.
  std::vector<std::pair<std::string, std::string>> sections;
};

// One recurring section heading with the term frequencies of its aggregated
// section text (stopwords removed).
struct Aspect {
  std::string heading_key;  // normalized: lowercase, trimmed, collapsed spaces
  std::int64_t doc_frequency = 0;
  TermBag term_weights;
};

// Aspects ordered by descending document frequency of the heading, ties
// broken by ascending heading key.
struct AspectModel {
  std::string category;
  std::size_t requested = 0;  // m
  std::vector<Aspect> aspects;
  std::vector<std::string> warnings;

  std::size_t size() const { return aspects.size(); }
};

// Aggregates section text per normalized heading over the articles whose
// categories contain `category`, and keeps the m most frequent headings.
// Fewer than m distinct headings (or zero matching articles) produces a
// smaller model plus a warning. Throws ConfigError for m < 1.
AspectModel build_aspect_model(const std::vector<WikiArticle>& articles,
                               const std::string& category, std::size_t m);

// Component k = cosine between the document's stopword-filtered term bag and
// aspect k's term weights; 0 for degenerate vectors. Always model.size() long.
std::vector<double> aspect_similarities(const TermBag& doc_terms, const AspectModel& model);

// One article per line: {"title":..., "categories":[...], "sections":[{"heading":...,"text":...}]}
std::vector<WikiArticle> read_wiki_articles(const std::string& path);
std::string wiki_article_to_json_line(const WikiArticle& article);

std::string aspect_model_to_json(const AspectModel& model);
AspectModel aspect_model_from_json(const std::string& json_text);
void save_aspect_model(const AspectModel& model, const std::string& path);
AspectModel load_aspect_model(const std::string& path);

}  // namespace vitalfilter

#endif  // VITALFILTER_ASPECTS_HPP
