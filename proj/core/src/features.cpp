#include "stance/features.hpp"

#include <bit>
#include <charconv>
#include <ostream>
#include <sstream>

#include "stance/errors.hpp"
#include "text_util.hpp"

namespace stance {

namespace {

constexpr std::array<FeatureGroup, kFeatureGroupCount> kCanonicalOrder = {
    FeatureGroup::Afinn,        FeatureGroup::Hl,      FeatureGroup::Liwc,
    FeatureGroup::Dal,          FeatureGroup::Hashtag, FeatureGroup::Mention,
    FeatureGroup::PunctMarks,   FeatureGroup::ContextBased,
    FeatureGroup::LabeledBased,
};

std::string normalize_group_name(std::string_view name) {
  std::string out = detail::to_lower(detail::trim(name));
  for (char& c : out) {
    if (c == '-') c = '_';
  }
  return out;
}

void append_value(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

}  // namespace

std::string_view to_string(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::Afinn: return "AFINN";
    case FeatureGroup::Hl: return "HL";
    case FeatureGroup::Liwc: return "LIWC";
    case FeatureGroup::Dal: return "DAL";
    case FeatureGroup::Hashtag: return "hashtag";
    case FeatureGroup::Mention: return "mention";
    case FeatureGroup::PunctMarks: return "punct_marks";
    case FeatureGroup::ContextBased: return "context_based";
    case FeatureGroup::LabeledBased: return "labeled_based";
  }
  return "?";
}

std::optional<FeatureGroup> parse_feature_group(std::string_view name) {
  const std::string n = normalize_group_name(name);
  for (FeatureGroup g : kCanonicalOrder) {
    if (n == normalize_group_name(to_string(g))) return g;
  }
  return std::nullopt;
}

std::size_t feature_group_size(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::Afinn:
    case FeatureGroup::Hl:
    case FeatureGroup::Liwc:
    case FeatureGroup::Hashtag:
    case FeatureGroup::Mention:
      return 1;
    case FeatureGroup::Dal:
    case FeatureGroup::PunctMarks:
    case FeatureGroup::ContextBased:
      return 6;
    case FeatureGroup::LabeledBased:
      return 7;
  }
  return 0;
}

FeatureGroupSet::FeatureGroupSet(std::initializer_list<FeatureGroup> groups) {
  for (FeatureGroup g : groups) insert(g);
}

FeatureGroupSet FeatureGroupSet::all() {
  FeatureGroupSet set;
  for (FeatureGroup g : kCanonicalOrder) set.insert(g);
  return set;
}

FeatureGroupSet FeatureGroupSet::from_bits(std::uint32_t bits) {
  FeatureGroupSet set;
  set.bits_ = bits & ((std::uint32_t{1} << kFeatureGroupCount) - 1);
  return set;
}

std::size_t FeatureGroupSet::size() const { return std::popcount(bits_); }

std::vector<FeatureGroup> FeatureGroupSet::to_vector() const {
  std::vector<FeatureGroup> out;
  for (FeatureGroup g : kCanonicalOrder) {
    if (contains(g)) out.push_back(g);
  }
  return out;
}

std::string format_groups(FeatureGroupSet groups) {
  std::string out;
  for (FeatureGroup g : groups.to_vector()) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

FeatureGroupSet parse_groups(std::string_view text) {
  FeatureGroupSet set;
  std::string current;
  const auto flush = [&] {
    if (current.empty()) return;
    const auto g = parse_feature_group(current);
    if (!g) throw ConfigError("unknown feature group '" + current + "'");
    set.insert(*g);
    current.clear();
  };
  for (char c : text) {
    if (detail::is_space(static_cast<unsigned char>(c)) || c == ',') {
      flush();
    } else {
      current += c;
    }
  }
  flush();
  return set;
}

FeatureGroupSet candidate_groups(ExperimentSetting setting) {
  FeatureGroupSet set = FeatureGroupSet::all();
  if (setting == ExperimentSetting::Experiment1) set.erase(FeatureGroup::LabeledBased);
  return set;
}

std::string_view to_string(ExperimentSetting setting) {
  return setting == ExperimentSetting::Experiment1 ? "experiment1" : "experiment2";
}

std::optional<ExperimentSetting> parse_experiment_setting(std::string_view name) {
  const std::string n = normalize_group_name(name);
  if (n == "experiment1") return ExperimentSetting::Experiment1;
  if (n == "experiment2") return ExperimentSetting::Experiment2;
  return std::nullopt;
}

StructuralFeatures extract_structural(const TokenSequence& tokens) {
  StructuralFeatures f;
  for (const Token& t : tokens) {
    switch (t.kind) {
      case TokenKind::Hashtag: ++f.hashtag_count; break;
      case TokenKind::Mention: ++f.mention_count; break;
      case TokenKind::Punct:
        switch (t.surface[0]) {
          case '!': ++f.punct.exclam; break;
          case '?': ++f.punct.question; break;
          case '.': ++f.punct.period; break;
          case ',': ++f.punct.comma; break;
          case ';': ++f.punct.semicolon; break;
          default: break;
        }
        break;
      default: break;
    }
  }
  f.punct.total =
      f.punct.exclam + f.punct.question + f.punct.period + f.punct.comma + f.punct.semicolon;
  return f;
}

std::array<double, 7> encode_annotation_features(Sentiment sentiment, OpinionTowards opinion) {
  std::array<double, 7> out{};
  switch (sentiment) {
    case Sentiment::Positive: out[0] = 1; break;
    case Sentiment::Negative: out[1] = 1; break;
    case Sentiment::Neutral: out[2] = 1; break;
    case Sentiment::None: out[3] = 1; break;
  }
  out[3 + static_cast<int>(opinion)] = 1;
  return out;
}

std::vector<std::string> FeatureSchema::names() const {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const auto& [group, name] : entries) out.push_back(name);
  return out;
}

bool operator==(const FeatureSchema& a, const FeatureSchema& b) {
  return a.entries == b.entries;
}

FeatureSchemaPtr build_schema(FeatureGroupSet groups) {
  auto schema = std::make_shared<FeatureSchema>();
  const auto add = [&](FeatureGroup g, std::string name) {
    schema->entries.emplace_back(g, std::move(name));
  };
  for (FeatureGroup g : groups.to_vector()) {
    switch (g) {
      case FeatureGroup::Afinn:
        add(g, "afinn_sum");
        break;
      case FeatureGroup::Hl:
        add(g, "hl_diff");
        break;
      case FeatureGroup::Liwc:
        add(g, "liwc_diff");
        break;
      case FeatureGroup::Dal:
        add(g, "dal_pleasantness_sum");
        add(g, "dal_activation_sum");
        add(g, "dal_imagery_sum");
        add(g, "dal_pleasantness_mean");
        add(g, "dal_activation_mean");
        add(g, "dal_imagery_mean");
        break;
      case FeatureGroup::Hashtag:
        add(g, "hashtag_count");
        break;
      case FeatureGroup::Mention:
        add(g, "mention_count");
        break;
      case FeatureGroup::PunctMarks:
        add(g, "punct_exclam");
        add(g, "punct_question");
        add(g, "punct_period");
        add(g, "punct_comma");
        add(g, "punct_semicolon");
        add(g, "punct_total");
        break;
      case FeatureGroup::ContextBased:
        add(g, "target_by_name");
        add(g, "target_by_pronoun");
        add(g, "target_party");
        add(g, "target_party_colleagues");
        add(g, "targets_oppositors");
        add(g, "nobody");
        break;
      case FeatureGroup::LabeledBased:
        add(g, "sentiment_positive");
        add(g, "sentiment_negative");
        add(g, "sentiment_neutral");
        add(g, "sentiment_none");
        add(g, "opinion_direct");
        add(g, "opinion_indirect");
        add(g, "opinion_none");
        break;
    }
  }
  return schema;
}

FeatureExtractor::FeatureExtractor(FeatureGroupSet groups, const LexiconSet& lexicons,
                                   const TargetKnowledge* kb)
    : groups_(groups), lexicons_(&lexicons), kb_(kb), schema_(build_schema(groups)) {
  const auto require = [&](FeatureGroup g, bool available) {
    if (groups_.contains(g) && !available) {
      throw ConfigError("feature group '" + std::string(to_string(g)) +
                        "' selected but its resource is not available");
    }
  };
  require(FeatureGroup::Afinn, lexicons.afinn.has_value());
  require(FeatureGroup::Hl, lexicons.hl.has_value());
  require(FeatureGroup::Liwc, lexicons.liwc.has_value());
  require(FeatureGroup::Dal, lexicons.dal.has_value());
  require(FeatureGroup::ContextBased, kb != nullptr);
}

FeatureVector FeatureExtractor::extract(const TweetRecord& record) const {
  FeatureVector vec;
  vec.schema = schema_;
  vec.values.reserve(schema_->size());
  const TokenSequence tokens = tokenize(record.text);
  const StructuralFeatures structural = extract_structural(tokens);

  for (FeatureGroup g : groups_.to_vector()) {
    switch (g) {
      case FeatureGroup::Afinn:
        vec.values.push_back(score_afinn(tokens, *lexicons_->afinn));
        break;
      case FeatureGroup::Hl:
        vec.values.push_back(score_hl(tokens, *lexicons_->hl));
        break;
      case FeatureGroup::Liwc:
        vec.values.push_back(score_liwc(tokens, *lexicons_->liwc));
        break;
      case FeatureGroup::Dal: {
        const DalScores s = score_dal(tokens, *lexicons_->dal);
        vec.values.insert(vec.values.end(),
                          {s.pleasantness_sum, s.activation_sum, s.imagery_sum,
                           s.pleasantness_mean, s.activation_mean, s.imagery_mean});
        break;
      }
      case FeatureGroup::Hashtag:
        vec.values.push_back(structural.hashtag_count);
        break;
      case FeatureGroup::Mention:
        vec.values.push_back(structural.mention_count);
        break;
      case FeatureGroup::PunctMarks: {
        const auto& p = structural.punct;
        vec.values.insert(vec.values.end(),
                          {static_cast<double>(p.exclam), static_cast<double>(p.question),
                           static_cast<double>(p.period), static_cast<double>(p.comma),
                           static_cast<double>(p.semicolon), static_cast<double>(p.total)});
        break;
      }
      case FeatureGroup::ContextBased: {
        const ContextFeatures c = extract_context_features(tokens, *kb_);
        vec.values.insert(vec.values.end(),
                          {static_cast<double>(c.target_by_name),
                           static_cast<double>(c.target_by_pronoun),
                           static_cast<double>(c.target_party),
                           static_cast<double>(c.target_party_colleagues),
                           static_cast<double>(c.targets_oppositors),
                           static_cast<double>(c.nobody)});
        break;
      }
      case FeatureGroup::LabeledBased: {
        if (!record.has_annotations()) {
          throw ConfigError("record '" + record.id +
                            "' lacks sentiment/opinion annotations; use the experiment1 "
                            "setting for unannotated corpora");
        }
        const auto labels =
            encode_annotation_features(*record.sentiment, *record.opinion_towards);
        vec.values.insert(vec.values.end(), labels.begin(), labels.end());
        break;
      }
    }
  }
  return vec;
}

FeatureVector assemble_vector(const TweetRecord& record, FeatureGroupSet groups,
                              const LexiconSet& lexicons, const TargetKnowledge& kb) {
  return FeatureExtractor(groups, lexicons, &kb).extract(record);
}

void write_feature_table(std::ostream& out, std::span<const TweetRecord> records,
                         std::span<const FeatureVector> vectors) {
  if (records.size() != vectors.size()) {
    throw Error("write_feature_table: records and vectors differ in length");
  }
  std::string line = "id\tstance";
  if (!vectors.empty()) {
    for (const std::string& name : vectors.front().schema->names()) {
      line += '\t';
      line += name;
    }
  }
  line += '\n';
  out << line;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    line.clear();
    line += records[i].id;
    line += '\t';
    line += to_string(records[i].stance);
    for (double v : vectors[i].values) {
      line += '\t';
      append_value(line, v);
    }
    line += '\n';
    out << line;
  }
}

}  // namespace stance
