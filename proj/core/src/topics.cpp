#include "vitalfilter/topics.hpp"

#include <algorithm>

#include <json.hpp>

#include "vitalfilter/errors.hpp"
#include "vitalfilter/text.hpp"
#include "vitalfilter/util.hpp"

namespace vitalfilter {

namespace {

using ordered_json = nlohmann::ordered_json;

EntityTopic topic_from_json(const nlohmann::json& j) {
  EntityTopic topic;
  topic.entity_id = j.at("entity_id").get<std::string>();
  topic.canonical_name = j.at("canonical_name").get<std::string>();
  for (const auto& a : j.at("aliases")) topic.aliases.push_back(a.get<std::string>());

  const std::string type_name = j.at("entity_type").get<std::string>();
  auto type = entity_type_from_name(type_name);
  if (!type)
    throw SchemaError("topic " + topic.entity_id + ": unknown entity_type '" + type_name + "'");
  topic.entity_type = *type;

  const auto& pj = j.at("profile");
  const std::string kind_name = pj.at("kind").get<std::string>();
  auto kind = profile_kind_from_name(kind_name);
  if (!kind)
    throw SchemaError("topic " + topic.entity_id + ": unknown profile kind '" + kind_name + "'");
  topic.profile.kind = *kind;
  if (pj.contains("text")) topic.profile.text = pj.at("text").get<std::string>();
  if (pj.contains("timestamp") && !pj.at("timestamp").is_null())
    topic.profile.timestamp = pj.at("timestamp").get<std::int64_t>();

  if (j.contains("related_entities"))
    for (const auto& r : j.at("related_entities"))
      topic.related_entities.push_back(r.get<std::string>());
  topic.train_cutoff = j.at("train_cutoff").get<std::int64_t>();
  return topic;
}

void validate_topic(const EntityTopic& topic) {
  if (topic.entity_id.empty()) throw SchemaError("topic with empty entity_id");
  if (topic.canonical_name.empty())
    throw SchemaError("topic " + topic.entity_id + ": empty canonical_name");
  if (std::find(topic.aliases.begin(), topic.aliases.end(), topic.canonical_name) ==
      topic.aliases.end())
    throw SchemaError("topic " + topic.entity_id + ": canonical_name missing from aliases");
  if (topic.profile.kind == ProfileKind::kNull && !topic.profile.text.empty())
    throw SchemaError("topic " + topic.entity_id + ": null profile with non-empty text");
}

}  // namespace

std::string_view profile_kind_name(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::kWiki: return "wiki";
    case ProfileKind::kWeb: return "web";
    case ProfileKind::kNull: return "null";
  }
  return "null";
}

std::optional<ProfileKind> profile_kind_from_name(std::string_view name) {
  if (name == "wiki") return ProfileKind::kWiki;
  if (name == "web") return ProfileKind::kWeb;
  if (name == "null") return ProfileKind::kNull;
  return std::nullopt;
}

std::string_view entity_type_name(EntityType type) {
  switch (type) {
    case EntityType::kPer: return "PER";
    case EntityType::kOrg: return "ORG";
    case EntityType::kFac: return "FAC";
  }
  return "PER";
}

std::optional<EntityType> entity_type_from_name(std::string_view name) {
  if (name == "PER") return EntityType::kPer;
  if (name == "ORG") return EntityType::kOrg;
  if (name == "FAC") return EntityType::kFac;
  return std::nullopt;
}

Registry::Registry(std::vector<EntityTopic> topics) : topics_(std::move(topics)) {
  for (std::size_t i = 0; i < topics_.size(); ++i) {
    auto [it, inserted] = by_id_.emplace(topics_[i].entity_id, i);
    if (!inserted)
      throw SchemaError("duplicate entity_id '" + topics_[i].entity_id + "'");
  }
}

const EntityTopic* Registry::find(const std::string& entity_id) const {
  auto it = by_id_.find(entity_id);
  return it == by_id_.end() ? nullptr : &topics_[it->second];
}

Registry registry_from_topics(std::vector<EntityTopic> topics) {
  std::vector<std::string> warnings;
  for (auto& topic : topics) {
    validate_topic(topic);
    // Profiles dated after the training cutoff would leak future text into
    // training; downgrade them to no-profile.
    if (topic.profile.kind != ProfileKind::kNull && topic.profile.timestamp &&
        *topic.profile.timestamp > topic.train_cutoff) {
      warnings.push_back("topic " + topic.entity_id + ": profile timestamp " +
                         std::to_string(*topic.profile.timestamp) +
                         " is after train_cutoff " + std::to_string(topic.train_cutoff) +
                         "; profile downgraded to null");
      topic.profile.kind = ProfileKind::kNull;
      topic.profile.text.clear();
      topic.profile.timestamp.reset();
    }
  }
  Registry registry(std::move(topics));
  for (auto& w : warnings) registry.add_warning(std::move(w));
  return registry;
}

Registry load_topics(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("topics file " + path + ": " + e.what());
  }
  if (!j.is_array()) throw ParseError("topics file " + path + ": expected a JSON array");
  std::vector<EntityTopic> topics;
  try {
    for (const auto& tj : j) topics.push_back(topic_from_json(tj));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("topics file " + path + ": " + e.what());
  }
  return registry_from_topics(std::move(topics));
}

std::string topics_to_json(const std::vector<EntityTopic>& topics) {
  ordered_json out = ordered_json::array();
  for (const auto& t : topics) {
    ordered_json j;
    j["entity_id"] = t.entity_id;
    j["canonical_name"] = t.canonical_name;
    j["aliases"] = t.aliases;
    j["entity_type"] = std::string(entity_type_name(t.entity_type));
    ordered_json pj;
    pj["kind"] = std::string(profile_kind_name(t.profile.kind));
    pj["text"] = t.profile.text;
    if (t.profile.timestamp)
      pj["timestamp"] = *t.profile.timestamp;
    else
      pj["timestamp"] = nullptr;
    j["profile"] = std::move(pj);
    j["related_entities"] = t.related_entities;
    j["train_cutoff"] = t.train_cutoff;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

ProfileFeatures profile_features(const EntityTopic& topic) {
  ProfileFeatures f;
  f.profile_kind = topic.profile.kind;
  f.profile_len = tokenize(topic.profile.text).size();
  f.related_count = topic.related_entities.size();
  return f;
}

}  // namespace vitalfilter
