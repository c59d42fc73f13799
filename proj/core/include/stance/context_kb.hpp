#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "stance/tokenizer.hpp"

namespace stance {

/// Entity lists for one target: the tokens that signal the target itself,
/// its pronouns, its party, and its party colleagues, plus the name of the
/// rival target whose lists supply the oppositors.
struct TargetSpec {
  std::string target_name;
  std::vector<std::string> name_tokens;
  std::vector<std::string> pronoun_tokens;
  std::vector<std::string> party_tokens;
  std::vector<std::string> colleague_tokens;
  std::string rival_name;  // empty when no rival is configured
};

/// A target spec plus the derived oppositor list: the union of the rival's
/// party and colleague tokens, deduplicated and sorted.
struct TargetKnowledge {
  TargetSpec spec;
  std::vector<std::string> oppositor_tokens;
};

/// The six context features. `nobody` is 1 exactly when the five counts
/// are all zero.
struct ContextFeatures {
  int target_by_name = 0;
  int target_by_pronoun = 0;
  int target_party = 0;
  int target_party_colleagues = 0;
  int targets_oppositors = 0;
  int nobody = 0;
};

bool operator==(const ContextFeatures& a, const ContextFeatures& b);

/// Reads a knowledge file (JSON with fields target, names, pronouns, party,
/// colleagues, rival). Tokens are lowercased and deduplicated; empty tokens
/// raise LoadError.
TargetSpec load_target_spec(const std::filesystem::path& path);

/// Derives the oppositor list from the rival's party and colleague tokens.
/// Throws ConfigError when `rival` is null, names itself as the target, or
/// does not match spec.rival_name.
TargetKnowledge build_knowledge(const TargetSpec& spec, const TargetSpec* rival);

/// Counts, per category, the tokens matched by that category's list. WORD
/// tokens match by whole-norm equality (clitic stems included, so "she's"
/// matches "she"); HASHTAG and MENTION tokens match by substring containment
/// in the norm. A token contributes at most 1 to each category.
ContextFeatures extract_context_features(const TokenSequence& tokens,
                                         const TargetKnowledge& kb);

}  // namespace stance
