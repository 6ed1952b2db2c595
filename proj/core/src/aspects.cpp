#include "vitalfilter/aspects.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

AspectModel build_aspect_model(const std::vector<WikiArticle>& articles,
                               const std::string& category, std::size_t m) {
  if (m < 1) throw ConfigError("aspect model size must be >= 1");

  AspectModel model;
  model.category = category;
  model.requested = m;

  // Document frequency = number of articles containing the heading at least
  // once; aggregation of section text is order-independent.
  std::map<std::string, std::int64_t> doc_frequency;
  std::map<std::string, std::string> aggregated_text;
  std::size_t matching_articles = 0;
  for (const auto& article : articles) {
    if (std::find(article.categories.begin(), article.categories.end(), category) ==
        article.categories.end())
      continue;
    ++matching_articles;
    std::set<std::string> seen;
    for (const auto& [heading, text] : article.sections) {
      std::string key = normalize_whitespace(heading);
      if (key.empty())
        throw SchemaError("article '" + article.title + "': empty section heading");
      if (seen.insert(key).second) ++doc_frequency[key];
      auto& agg = aggregated_text[key];
      if (!agg.empty()) agg.push_back(' ');
      agg += text;
    }
  }

  if (matching_articles == 0) {
    model.warnings.push_back("no articles in category '" + category + "'; model is empty");
    return model;
  }

  std::vector<std::pair<std::string, std::int64_t>> ranked(doc_frequency.begin(),
                                                           doc_frequency.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() < m)
    model.warnings.push_back("only " + std::to_string(ranked.size()) +
                             " distinct headings available (requested " + std::to_string(m) + ")");

  const std::size_t keep = std::min(m, ranked.size());
  for (std::size_t k = 0; k < keep; ++k) {
    Aspect aspect;
    aspect.heading_key = ranked[k].first;
    aspect.doc_frequency = ranked[k].second;
    aspect.term_weights = term_bag(aggregated_text[aspect.heading_key]);
    model.aspects.push_back(std::move(aspect));
  }
  return model;
}

std::vector<double> aspect_similarities(const TermBag& doc_terms, const AspectModel& model) {
  std::vector<double> sims;
  sims.reserve(model.aspects.size());
  for (const auto& aspect : model.aspects) sims.push_back(cosine(doc_terms, aspect.term_weights));
  return sims;
}

std::vector<WikiArticle> read_wiki_articles(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<WikiArticle> articles;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      WikiArticle article;
      article.title = j.at("title").get<std::string>();
      for (const auto& c : j.at("categories")) article.categories.push_back(c.get<std::string>());
      for (const auto& s : j.at("sections")) {
        std::string heading = s.at("heading").get<std::string>();
        if (normalize_whitespace(heading).empty())
          throw SchemaError("article '" + article.title + "': empty section heading");
        article.sections.emplace_back(std::move(heading), s.at("text").get<std::string>());
      }
      articles.push_back(std::move(article));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("wiki article: ") + e.what(), line_number);
    }
  }
  return articles;
}

std::string wiki_article_to_json_line(const WikiArticle& article) {
  ordered_json j;
  j["title"] = article.title;
  j["categories"] = article.categories;
  ordered_json sections = ordered_json::array();
  for (const auto& [heading, text] : article.sections) {
    ordered_json sj;
    sj["heading"] = heading;
    sj["text"] = text;
    sections.push_back(std::move(sj));
  }
  j["sections"] = std::move(sections);
  return j.dump();
}

std::string aspect_model_to_json(const AspectModel& model) {
  ordered_json j;
  j["category"] = model.category;
  j["requested"] = model.requested;
  ordered_json aspects = ordered_json::array();
  for (const auto& aspect : model.aspects) {
    ordered_json aj;
    aj["heading"] = aspect.heading_key;
    aj["doc_frequency"] = aspect.doc_frequency;
    ordered_json terms;
    for (const auto& [term, weight] : aspect.term_weights) terms[term] = weight;
    aj["terms"] = std::move(terms);
    aspects.push_back(std::move(aj));
  }
  j["aspects"] = std::move(aspects);
  j["warnings"] = model.warnings;
  return j.dump(2) + "\n";
}

AspectModel aspect_model_from_json(const std::string& json_text) {
  AspectModel model;
  try {
    auto j = nlohmann::json::parse(json_text);
    model.category = j.at("category").get<std::string>();
    model.requested = j.at("requested").get<std::size_t>();
    for (const auto& aj : j.at("aspects")) {
      Aspect aspect;
      aspect.heading_key = aj.at("heading").get<std::string>();
      aspect.doc_frequency = aj.at("doc_frequency").get<std::int64_t>();
      for (const auto& [term, weight] : aj.at("terms").items())
        aspect.term_weights[term] = weight.get<double>();
      model.aspects.push_back(std::move(aspect));
    }
    if (j.contains("warnings"))
      for (const auto& w : j.at("warnings")) model.warnings.push_back(w.get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("aspect model: ") + e.what());
  }
  return model;
}

void save_aspect_model(const AspectModel& model, const std::string& path) {
  write_file(path, aspect_model_to_json(model));
}

AspectModel load_aspect_model(const std::string& path) {
  return aspect_model_from_json(read_file(path));
}

}  // namespace vitalfilter
