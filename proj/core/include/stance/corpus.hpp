#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stance {

enum class Stance { Against, Favor, None };

enum class Sentiment { Positive, Negative, Neutral, None };

/// The "Opinion towards" annotation: whether the tweet's opinion addresses
/// the target directly (1), something related to it (2), or nothing (3).
enum class OpinionTowards { Direct = 1, Indirect = 2, NoOpinion = 3 };

std::string_view to_string(Stance s);
std::string_view to_string(Sentiment s);
Stance parse_stance(std::string_view text);
Sentiment parse_sentiment(std::string_view text);
OpinionTowards parse_opinion_towards(std::string_view text);

struct TweetRecord {
  std::string id;
  std::string target;
  std::string text;
  Stance stance = Stance::None;
  std::optional<Sentiment> sentiment;
  std::optional<OpinionTowards> opinion_towards;

  /// True when both annotation labels are present (they come from the same
  /// annotation pass, so they are either both set or both absent).
  bool has_annotations() const { return sentiment && opinion_towards; }
};

bool operator==(const TweetRecord& a, const TweetRecord& b);

/// Column-name mapping for the tab-separated distribution format. Defaults
/// match the official header names; the stance-only release simply lacks the
/// sentiment/opinion columns. Column names are matched case-insensitively.
struct CorpusSchema {
  std::string id_column = "ID";
  std::string target_column = "Target";
  std::string text_column = "Tweet";
  std::string stance_column = "Stance";
  std::string opinion_column = "Opinion towards";
  std::string sentiment_column = "Sentiment";

  /// When set, rows whose (trimmed) target differs are dropped.
  std::optional<std::string> target_filter;
};

/// Parses a tab-separated corpus: UTF-8, header row, LF or CRLF line ends.
/// Ordering is preserved. Throws SchemaError when a required column is
/// missing and RowError (with the 1-based line number) for malformed rows.
std::vector<TweetRecord> parse_corpus(std::istream& in, const CorpusSchema& schema = {});

std::vector<TweetRecord> load_corpus(const std::filesystem::path& path,
                                     const CorpusSchema& schema = {});

/// Serializes records back to the tabular format; reparsing the output
/// yields identical records. Annotation columns are written only when the
/// records carry annotations (all records must agree).
void write_corpus(std::ostream& out, std::span<const TweetRecord> records,
                  const CorpusSchema& schema = {});

struct DistributionReport {
  std::size_t total = 0;
  double pct_against = 0;  // one-decimal percentages
  double pct_favor = 0;
  double pct_none = 0;
};

DistributionReport corpus_stats(std::span<const TweetRecord> records);

std::string format_distribution(const DistributionReport& report);

}  // namespace stance
