#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stance/context_kb.hpp"
#include "stance/corpus.hpp"
#include "stance/lexicons.hpp"
#include "stance/tokenizer.hpp"

namespace stance {

/// The nine feature groups, in the canonical order used for assembling
/// vectors and for formatting ablation tables.
enum class FeatureGroup : unsigned {
  Afinn = 0,
  Hl,
  Liwc,
  Dal,
  Hashtag,
  Mention,
  PunctMarks,
  ContextBased,
  LabeledBased,
};

inline constexpr std::size_t kFeatureGroupCount = 9;

/// Canonical group name ("AFINN", "hashtag", "punct_marks", ...).
std::string_view to_string(FeatureGroup g);

/// Case-insensitive parse; '-' and '_' are interchangeable.
std::optional<FeatureGroup> parse_feature_group(std::string_view name);

/// Number of features the group contributes to a vector.
std::size_t feature_group_size(FeatureGroup g);

/// A small ordered set of feature groups, iterated in canonical order.
class FeatureGroupSet {
 public:
  constexpr FeatureGroupSet() = default;
  FeatureGroupSet(std::initializer_list<FeatureGroup> groups);

  static FeatureGroupSet all();
  static FeatureGroupSet from_bits(std::uint32_t bits);

  void insert(FeatureGroup g) { bits_ |= bit(g); }
  void erase(FeatureGroup g) { bits_ &= ~bit(g); }
  bool contains(FeatureGroup g) const { return (bits_ & bit(g)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::uint32_t bits() const { return bits_; }

  /// Members in canonical order.
  std::vector<FeatureGroup> to_vector() const;

  friend bool operator==(FeatureGroupSet a, FeatureGroupSet b) { return a.bits_ == b.bits_; }

 private:
  static constexpr std::uint32_t bit(FeatureGroup g) {
    return std::uint32_t{1} << static_cast<unsigned>(g);
  }
  std::uint32_t bits_ = 0;
};

/// Space-separated canonical names, e.g. "AFINN HL context_based".
std::string format_groups(FeatureGroupSet groups);

/// Parses a whitespace/comma-separated group list.
FeatureGroupSet parse_groups(std::string_view text);

/// experiment1 excludes the annotation-label features; experiment2 adds them.
enum class ExperimentSetting { Experiment1, Experiment2 };

FeatureGroupSet candidate_groups(ExperimentSetting setting);
std::string_view to_string(ExperimentSetting setting);
std::optional<ExperimentSetting> parse_experiment_setting(std::string_view name);

/// Hashtag/mention frequencies and the six punctuation counts.
struct StructuralFeatures {
  int hashtag_count = 0;
  int mention_count = 0;
  struct Punct {
    int exclam = 0;
    int question = 0;
    int period = 0;
    int comma = 0;
    int semicolon = 0;
    int total = 0;  // sum of the five counts above
  } punct;
};

StructuralFeatures extract_structural(const TokenSequence& tokens);

/// One-hot encoding of the two annotation labels: four sentiment indicators
/// (positive, negative, neutral, none) then three opinion indicators
/// (direct, indirect, no-opinion).
std::array<double, 7> encode_annotation_features(Sentiment sentiment, OpinionTowards opinion);

/// Ordered (group, name) pairs describing one vector layout.
struct FeatureSchema {
  std::vector<std::pair<FeatureGroup, std::string>> entries;

  std::size_t size() const { return entries.size(); }
  std::vector<std::string> names() const;
};

bool operator==(const FeatureSchema& a, const FeatureSchema& b);

using FeatureSchemaPtr = std::shared_ptr<const FeatureSchema>;

/// Builds the schema for a group selection, groups laid out in canonical
/// order.
FeatureSchemaPtr build_schema(FeatureGroupSet groups);

struct FeatureVector {
  FeatureSchemaPtr schema;
  std::vector<double> values;
};

/// Computes vectors for one fixed configuration. Construction validates
/// that every selected group's resource is present (ConfigError names the
/// missing group); records lacking annotation labels are rejected at
/// extraction time when LABELED_BASED is selected.
class FeatureExtractor {
 public:
  FeatureExtractor(FeatureGroupSet groups, const LexiconSet& lexicons,
                   const TargetKnowledge* kb);

  FeatureVector extract(const TweetRecord& record) const;

  const FeatureSchemaPtr& schema() const { return schema_; }
  FeatureGroupSet groups() const { return groups_; }

 private:
  FeatureGroupSet groups_;
  const LexiconSet* lexicons_;
  const TargetKnowledge* kb_;
  FeatureSchemaPtr schema_;
};

/// One-shot convenience wrapper around FeatureExtractor.
FeatureVector assemble_vector(const TweetRecord& record, FeatureGroupSet groups,
                              const LexiconSet& lexicons, const TargetKnowledge& kb);

/// Writes vectors as a tab-separated table: id, stance, then one column per
/// schema name.
void write_feature_table(std::ostream& out, std::span<const TweetRecord> records,
                         std::span<const FeatureVector> vectors);

}  // namespace stance
