#include "stance/context_kb.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <span>

#include <json.hpp>

#include "stance/errors.hpp"
#include "text_util.hpp"

namespace stance {

namespace {

using nlohmann::json;

std::vector<std::string> read_token_list(const json& j, const char* field,
                                         const std::filesystem::path& path) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw LoadError(path.string() + ": missing token list '" + std::string(field) + "'");
  }
  std::vector<std::string> tokens;
  for (const json& item : j[field]) {
    if (!item.is_string()) {
      throw LoadError(path.string() + ": non-string entry in '" + std::string(field) + "'");
    }
    std::string token = detail::to_lower(detail::trim(item.get<std::string>()));
    if (token.empty()) {
      throw LoadError(path.string() + ": empty token in '" + std::string(field) + "'");
    }
    if (std::find(tokens.begin(), tokens.end(), token) == tokens.end()) {
      tokens.push_back(std::move(token));
    }
  }
  return tokens;
}

bool token_matches_list(const Token& t, std::span<const std::string> list) {
  switch (t.kind) {
    case TokenKind::Word: {
      const auto stem = t.clitic_stem();
      for (const std::string& k : list) {
        if (t.norm == k) return true;
        if (stem && *stem == k) return true;
      }
      return false;
    }
    case TokenKind::Hashtag:
    case TokenKind::Mention:
      // Tags like "#StopHillary2016" or "@SenSanders" embed entity names in
      // longer runs, so they match by containment.
      for (const std::string& k : list) {
        if (t.norm.find(k) != std::string::npos) return true;
      }
      return false;
    default:
      return false;
  }
}

}  // namespace

bool operator==(const ContextFeatures& a, const ContextFeatures& b) {
  return a.target_by_name == b.target_by_name && a.target_by_pronoun == b.target_by_pronoun &&
         a.target_party == b.target_party &&
         a.target_party_colleagues == b.target_party_colleagues &&
         a.targets_oppositors == b.targets_oppositors && a.nobody == b.nobody;
}

TargetSpec load_target_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open knowledge file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("target") || !j["target"].is_string()) {
    throw LoadError(path.string() + ": missing 'target' field");
  }
  TargetSpec spec;
  spec.target_name = j["target"].get<std::string>();
  spec.name_tokens = read_token_list(j, "names", path);
  spec.pronoun_tokens = read_token_list(j, "pronouns", path);
  spec.party_tokens = read_token_list(j, "party", path);
  spec.colleague_tokens = read_token_list(j, "colleagues", path);
  if (j.contains("rival") && j["rival"].is_string()) {
    spec.rival_name = j["rival"].get<std::string>();
  }
  return spec;
}

TargetKnowledge build_knowledge(const TargetSpec& spec, const TargetSpec* rival) {
  if (rival == nullptr) {
    throw ConfigError("target '" + spec.target_name +
                      "' has no rival; oppositor features require one");
  }
  if (rival->target_name == spec.target_name) {
    throw ConfigError("target '" + spec.target_name + "' cannot be its own rival");
  }
  if (!spec.rival_name.empty() && rival->target_name != spec.rival_name) {
    throw ConfigError("target '" + spec.target_name + "' expects rival '" + spec.rival_name +
                      "', got '" + rival->target_name + "'");
  }
  std::set<std::string> oppositors(rival->party_tokens.begin(), rival->party_tokens.end());
  oppositors.insert(rival->colleague_tokens.begin(), rival->colleague_tokens.end());

  TargetKnowledge kb;
  kb.spec = spec;
  kb.oppositor_tokens.assign(oppositors.begin(), oppositors.end());
  return kb;
}

ContextFeatures extract_context_features(const TokenSequence& tokens,
                                         const TargetKnowledge& kb) {
  ContextFeatures f;
  for (const Token& t : tokens) {
    if (token_matches_list(t, kb.spec.name_tokens)) ++f.target_by_name;
    if (token_matches_list(t, kb.spec.pronoun_tokens)) ++f.target_by_pronoun;
    if (token_matches_list(t, kb.spec.party_tokens)) ++f.target_party;
    if (token_matches_list(t, kb.spec.colleague_tokens)) ++f.target_party_colleagues;
    if (token_matches_list(t, kb.oppositor_tokens)) ++f.targets_oppositors;
  }
  f.nobody = (f.target_by_name == 0 && f.target_by_pronoun == 0 && f.target_party == 0 &&
              f.target_party_colleagues == 0 && f.targets_oppositors == 0)
                 ? 1
                 : 0;
  return f;
}

}  // namespace stance
