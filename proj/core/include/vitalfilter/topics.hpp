#ifndef VITALFILTER_TOPICS_HPP
#define VITALFILTER_TOPICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vitalfilter {

enum class ProfileKind { kWiki, kWeb, kNull };

std::string_view profile_kind_name(ProfileKind kind);
std::optional<ProfileKind> profile_kind_from_name(std::string_view name);

enum class EntityType { kPer, kOrg, kFac };

std::string_view entity_type_name(EntityType type);
std::optional<EntityType> entity_type_from_name(std::string_view name);

struct Profile {
  ProfileKind kind = ProfileKind::kNull;
  std::string text;  // empty iff kind == kNull
  std::optional<std::int64_t> timestamp;
};

struct EntityTopic {
  std::string entity_id;
  std::string canonical_name;
  std::vector<std::string> aliases;  // includes canonical_name
  EntityType entity_type = EntityType::kPer;
  Profile profile;
  std::vector<std::string> related_entities;  // entity_id strings
  std::int64_t train_cutoff = 0;
};

// Immutable after load; safe for concurrent read.
class Registry {
 public:
  explicit Registry(std::vector<EntityTopic> topics);

  const std::vector<EntityTopic>& topics() const { return topics_; }
  const EntityTopic* find(const std::string& entity_id) const;
  std::size_t size() const { return topics_.size(); }

  // One line per profile downgraded at load (timestamp after train_cutoff).
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string warning) { warnings_.push_back(std::move(warning)); }

 private:
  std::vector<EntityTopic> topics_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::vector<std::string> warnings_;
};

// Loads and validates the topics JSON file. Profiles dated after the topic's
// train_cutoff are downgraded to kind=null (text cleared) with a warning
// recorded on the registry. Duplicate entity_id or an unknown entity_type is
// an error.
Registry load_topics(const std::string& path);

Registry registry_from_topics(std::vector<EntityTopic> topics);

std::string topics_to_json(const std::vector<EntityTopic>& topics);

struct ProfileFeatures {
  ProfileKind profile_kind;
  std::size_t profile_len;   // token count of profile text under the shared tokenizer
  std::size_t related_count; // |related_entities|
};

ProfileFeatures profile_features(const EntityTopic& topic);

}  // namespace vitalfilter

#endif  // VITALFILTER_TOPICS_HPP
