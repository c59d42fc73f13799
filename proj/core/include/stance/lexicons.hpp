#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "stance/tokenizer.hpp"

namespace stance {

/// Word -> integer polarity in [-5, +5] (the AFINN format).
struct PolarityLexicon {
  std::unordered_map<std::string, int> entries;
};

/// Positive/negative opinion wordlists (the Hu&Liu format). The two sets
/// are disjoint; words appearing in both files are dropped at load.
struct OpinionLexicon {
  std::unordered_set<std::string> positive;
  std::unordered_set<std::string> negative;
};

/// One pattern of a category lexicon: a literal word, or a prefix when the
/// source pattern carried a trailing '*'.
struct CategoryPattern {
  std::string stem;
  bool prefix = false;
};

/// Category name -> patterns (a LIWC-compatible format). The scorer tracks
/// the PosEmo and NegEmo categories.
struct CategoryLexicon {
  std::map<std::string, std::vector<CategoryPattern>> categories;
};

/// Word -> (pleasantness, activation, imagery) ratings on a three-point
/// scale (the DAL format).
struct DalEntry {
  double pleasantness = 0;
  double activation = 0;
  double imagery = 0;
};

struct DalLexicon {
  std::unordered_map<std::string, DalEntry> entries;
};

/// The four affect resources. A disengaged optional means the resource was
/// not configured; its feature group is then unavailable.
struct LexiconSet {
  std::optional<PolarityLexicon> afinn;
  std::optional<OpinionLexicon> hl;
  std::optional<CategoryLexicon> liwc;
  std::optional<DalLexicon> dal;
};

/// Paths to the resource files; absent paths disable that resource.
struct LexiconPaths {
  std::optional<std::filesystem::path> afinn;
  std::optional<std::filesystem::path> hl_positive;
  std::optional<std::filesystem::path> hl_negative;
  std::optional<std::filesystem::path> liwc;
  std::optional<std::filesystem::path> dal;
};

/// Loads all configured resources. Malformed lines raise LoadError with
/// file and line number. Duplicate Hu&Liu words across the two lists are
/// dropped from both, with a note to `warnings` when provided.
LexiconSet load_lexicons(const LexiconPaths& paths, std::ostream* warnings = nullptr);

PolarityLexicon load_polarity_lexicon(const std::filesystem::path& path);
OpinionLexicon load_opinion_lexicon(const std::filesystem::path& positive_path,
                                    const std::filesystem::path& negative_path,
                                    std::ostream* warnings = nullptr);
CategoryLexicon load_category_lexicon(const std::filesystem::path& path);
DalLexicon load_dal_lexicon(const std::filesystem::path& path);

// Scoring. Lookups use the norms of WORD and HASHTAG tokens; MENTION, URL,
// NUMBER, and PUNCT tokens are never looked up.

/// Sum of the polarities of the tokens found in the lexicon.
double score_afinn(const TokenSequence& tokens, const PolarityLexicon& lex);

/// (count of tokens in the positive list) - (count in the negative list).
double score_hl(const TokenSequence& tokens, const OpinionLexicon& lex);

/// (tokens matching any PosEmo pattern) - (tokens matching any NegEmo
/// pattern). A token matching several patterns of one category counts once.
double score_liwc(const TokenSequence& tokens, const CategoryLexicon& lex);

/// Per-dimension sum and mean over the matched tokens; all six values are 0
/// when nothing matches. The mean divides by the matched-token count.
struct DalScores {
  double pleasantness_sum = 0;
  double activation_sum = 0;
  double imagery_sum = 0;
  double pleasantness_mean = 0;
  double activation_mean = 0;
  double imagery_mean = 0;
};

DalScores score_dal(const TokenSequence& tokens, const DalLexicon& lex);

}  // namespace stance
