#include "stance/lexicons.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "stance/errors.hpp"
#include "text_util.hpp"

namespace stance {

namespace {

[[noreturn]] void load_error(const std::filesystem::path& path, std::size_t line_no,
                             const std::string& what) {
  throw LoadError(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

// Calls fn(line_no, trimmed_line) for every non-empty, non-comment line.
template <typename Fn>
void for_each_line(const std::filesystem::path& path, bool skip_semicolon_comments, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open lexicon file: " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    std::string_view trimmed = detail::trim(line);
    if (trimmed.empty()) continue;
    if (skip_semicolon_comments && trimmed.front() == ';') continue;
    fn(line_no, trimmed);
  }
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

double parse_real(std::string_view text, const std::filesystem::path& path,
                  std::size_t line_no) {
  const std::string s{detail::trim(text)};
  char* end = nullptr;
  const double value = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty()) {
    load_error(path, line_no, "expected a real number, got '" + s + "'");
  }
  return value;
}

bool lexical_token(const Token& t) {
  return t.kind == TokenKind::Word || t.kind == TokenKind::Hashtag;
}

bool matches_category(const std::string& norm, const std::vector<CategoryPattern>& patterns) {
  for (const CategoryPattern& p : patterns) {
    if (p.prefix ? norm.starts_with(p.stem) : norm == p.stem) return true;
  }
  return false;
}

}  // namespace

PolarityLexicon load_polarity_lexicon(const std::filesystem::path& path) {
  PolarityLexicon lex;
  for_each_line(path, false, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2) load_error(path, line_no, "expected 'word<TAB>value'");
    int value = 0;
    const std::string_view v = detail::trim(fields[1]);
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
      load_error(path, line_no, "expected an integer polarity, got '" + std::string(v) + "'");
    }
    if (value < -5 || value > 5) {
      load_error(path, line_no,
                 "polarity " + std::to_string(value) + " outside [-5, +5]");
    }
    lex.entries[detail::to_lower(detail::trim(fields[0]))] = value;
  });
  return lex;
}

OpinionLexicon load_opinion_lexicon(const std::filesystem::path& positive_path,
                                    const std::filesystem::path& negative_path,
                                    std::ostream* warnings) {
  OpinionLexicon lex;
  for_each_line(positive_path, true, [&](std::size_t, std::string_view line) {
    lex.positive.insert(detail::to_lower(line));
  });
  for_each_line(negative_path, true, [&](std::size_t, std::string_view line) {
    lex.negative.insert(detail::to_lower(line));
  });
  // Words listed as both positive and negative make the difference
  // ill-defined; drop them from both sides.
  std::vector<std::string> dupes;
  for (const std::string& w : lex.positive) {
    if (lex.negative.contains(w)) dupes.push_back(w);
  }
  for (const std::string& w : dupes) {
    lex.positive.erase(w);
    lex.negative.erase(w);
    if (warnings) {
      *warnings << "warning: '" << w << "' appears in both opinion lists; dropped\n";
    }
  }
  return lex;
}

CategoryLexicon load_category_lexicon(const std::filesystem::path& path) {
  CategoryLexicon lex;
  for_each_line(path, false, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_tabs(line);
    if (fields.size() != 2) load_error(path, line_no, "expected 'category<TAB>pattern'");
    const std::string category{detail::trim(fields[0])};
    std::string pattern = detail::to_lower(detail::trim(fields[1]));
    if (category.empty() || pattern.empty()) {
      load_error(path, line_no, "empty category or pattern");
    }
    CategoryPattern p;
    p.prefix = pattern.back() == '*';
    if (p.prefix) pattern.pop_back();
    if (pattern.empty()) load_error(path, line_no, "pattern is only '*'");
    if (pattern.find('*') != std::string::npos) {
      load_error(path, line_no, "'*' is only allowed at the end of a pattern");
    }
    p.stem = std::move(pattern);
    lex.categories[category].push_back(std::move(p));
  });
  return lex;
}

DalLexicon load_dal_lexicon(const std::filesystem::path& path) {
  DalLexicon lex;
  for_each_line(path, false, [&](std::size_t line_no, std::string_view line) {
    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      load_error(path, line_no, "expected 'word<TAB>pleasantness<TAB>activation<TAB>imagery'");
    }
    DalEntry entry;
    entry.pleasantness = parse_real(fields[1], path, line_no);
    entry.activation = parse_real(fields[2], path, line_no);
    entry.imagery = parse_real(fields[3], path, line_no);
    lex.entries[detail::to_lower(detail::trim(fields[0]))] = entry;
  });
  return lex;
}

LexiconSet load_lexicons(const LexiconPaths& paths, std::ostream* warnings) {
  LexiconSet set;
  if (paths.afinn) set.afinn = load_polarity_lexicon(*paths.afinn);
  if (paths.hl_positive || paths.hl_negative) {
    if (!paths.hl_positive || !paths.hl_negative) {
      throw ConfigError("the opinion lexicon needs both a positive and a negative wordlist");
    }
    set.hl = load_opinion_lexicon(*paths.hl_positive, *paths.hl_negative, warnings);
  }
  if (paths.liwc) set.liwc = load_category_lexicon(*paths.liwc);
  if (paths.dal) set.dal = load_dal_lexicon(*paths.dal);
  return set;
}

double score_afinn(const TokenSequence& tokens, const PolarityLexicon& lex) {
  double sum = 0;
  for (const Token& t : tokens) {
    if (!lexical_token(t)) continue;
    if (auto it = lex.entries.find(t.norm); it != lex.entries.end()) sum += it->second;
  }
  return sum;
}

double score_hl(const TokenSequence& tokens, const OpinionLexicon& lex) {
  int diff = 0;
  for (const Token& t : tokens) {
    if (!lexical_token(t)) continue;
    if (lex.positive.contains(t.norm)) ++diff;
    if (lex.negative.contains(t.norm)) --diff;
  }
  return diff;
}

double score_liwc(const TokenSequence& tokens, const CategoryLexicon& lex) {
  const auto pos = lex.categories.find("PosEmo");
  const auto neg = lex.categories.find("NegEmo");
  int diff = 0;
  for (const Token& t : tokens) {
    if (!lexical_token(t)) continue;
    if (pos != lex.categories.end() && matches_category(t.norm, pos->second)) ++diff;
    if (neg != lex.categories.end() && matches_category(t.norm, neg->second)) --diff;
  }
  return diff;
}

DalScores score_dal(const TokenSequence& tokens, const DalLexicon& lex) {
  DalScores scores;
  std::size_t matched = 0;
  for (const Token& t : tokens) {
    if (!lexical_token(t)) continue;
    const auto it = lex.entries.find(t.norm);
    if (it == lex.entries.end()) continue;
    ++matched;
    scores.pleasantness_sum += it->second.pleasantness;
    scores.activation_sum += it->second.activation;
    scores.imagery_sum += it->second.imagery;
  }
  if (matched > 0) {
    scores.pleasantness_mean = scores.pleasantness_sum / static_cast<double>(matched);
    scores.activation_mean = scores.activation_sum / static_cast<double>(matched);
    scores.imagery_mean = scores.imagery_sum / static_cast<double>(matched);
  }
  return scores;
}

}  // namespace stance
