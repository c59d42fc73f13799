#include "stance/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "stance/errors.hpp"
#include "text_util.hpp"

namespace stance {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::size_t find_column(const std::vector<std::string>& header, std::string_view name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (detail::iequals(detail::trim(header[i]), name)) return i;
  }
  return std::string::npos;
}

[[noreturn]] void row_error(std::size_t line_no, const std::string& what) {
  throw RowError("row " + std::to_string(line_no) + ": " + what);
}

double round_pct(std::size_t count, std::size_t total) {
  return std::round(1000.0 * static_cast<double>(count) / static_cast<double>(total)) / 10.0;
}

}  // namespace

std::string_view to_string(Stance s) {
  switch (s) {
    case Stance::Against: return "AGAINST";
    case Stance::Favor: return "FAVOR";
    case Stance::None: return "NONE";
  }
  return "NONE";
}

std::string_view to_string(Sentiment s) {
  switch (s) {
    case Sentiment::Positive: return "POSITIVE";
    case Sentiment::Negative: return "NEGATIVE";
    case Sentiment::Neutral: return "NEUTRAL";
    case Sentiment::None: return "NONE";
  }
  return "NONE";
}

Stance parse_stance(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (detail::iequals(t, "AGAINST")) return Stance::Against;
  if (detail::iequals(t, "FAVOR")) return Stance::Favor;
  if (detail::iequals(t, "NONE")) return Stance::None;
  throw Error("unknown stance label '" + std::string(t) + "'");
}

Sentiment parse_sentiment(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (detail::iequals(t, "POSITIVE") || detail::iequals(t, "POS")) return Sentiment::Positive;
  if (detail::iequals(t, "NEGATIVE") || detail::iequals(t, "NEG")) return Sentiment::Negative;
  if (detail::iequals(t, "NEUTRAL") || detail::iequals(t, "NEU")) return Sentiment::Neutral;
  if (detail::iequals(t, "NONE")) return Sentiment::None;
  throw Error("unknown sentiment label '" + std::string(t) + "'");
}

OpinionTowards parse_opinion_towards(std::string_view text) {
  // Accepts "1", "2", "3", and the annotated form "1. The tweet ...".
  const std::string_view t = detail::trim(text);
  if (!t.empty() && (t[0] == '1' || t[0] == '2' || t[0] == '3')) {
    if (t.size() == 1 || t[1] == '.' || t[1] == ' ') {
      return static_cast<OpinionTowards>(t[0] - '0');
    }
  }
  throw Error("unknown opinion-towards value '" + std::string(t) + "'");
}

bool operator==(const TweetRecord& a, const TweetRecord& b) {
  return a.id == b.id && a.target == b.target && a.text == b.text && a.stance == b.stance &&
         a.sentiment == b.sentiment && a.opinion_towards == b.opinion_towards;
}

std::vector<TweetRecord> parse_corpus(std::istream& in, const CorpusSchema& schema) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("corpus is empty (no header row)");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  // Drop a UTF-8 BOM if the file carries one.
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

  const std::vector<std::string> header = split_tabs(line);
  const std::size_t id_col = find_column(header, schema.id_column);
  const std::size_t target_col = find_column(header, schema.target_column);
  const std::size_t text_col = find_column(header, schema.text_column);
  const std::size_t stance_col = find_column(header, schema.stance_column);
  const std::size_t opinion_col = find_column(header, schema.opinion_column);
  const std::size_t sentiment_col = find_column(header, schema.sentiment_column);

  const auto require = [&](std::size_t col, const std::string& name) {
    if (col == std::string::npos) throw SchemaError("missing column '" + name + "'");
  };
  require(id_col, schema.id_column);
  require(target_col, schema.target_column);
  require(text_col, schema.text_column);
  require(stance_col, schema.stance_column);

  const bool has_annotations = opinion_col != std::string::npos &&
                               sentiment_col != std::string::npos;
  if (!has_annotations &&
      (opinion_col != std::string::npos || sentiment_col != std::string::npos)) {
    throw SchemaError("columns '" + schema.opinion_column + "' and '" +
                      schema.sentiment_column + "' must be present together");
  }

  std::vector<TweetRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != header.size()) {
      row_error(line_no, "expected " + std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
    }

    TweetRecord record;
    record.id = std::string(detail::trim(fields[id_col]));
    record.target = fields[target_col];
    record.text = fields[text_col];
    if (record.text.empty()) row_error(line_no, "empty tweet text");
    try {
      record.stance = parse_stance(fields[stance_col]);
      if (has_annotations) {
        record.sentiment = parse_sentiment(fields[sentiment_col]);
        record.opinion_towards = parse_opinion_towards(fields[opinion_col]);
      }
    } catch (const Error& e) {
      row_error(line_no, e.what());
    }

    if (schema.target_filter &&
        detail::trim(record.target) != detail::trim(*schema.target_filter)) {
      continue;
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<TweetRecord> load_corpus(const std::filesystem::path& path,
                                     const CorpusSchema& schema) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open corpus file: " + path.string());
  try {
    return parse_corpus(in, schema);
  } catch (const Error& e) {
    throw LoadError(path.string() + ": " + e.what());
  }
}

void write_corpus(std::ostream& out, std::span<const TweetRecord> records,
                  const CorpusSchema& schema) {
  const bool annotated = !records.empty() && records.front().has_annotations();
  for (const TweetRecord& r : records) {
    if (r.has_annotations() != annotated) {
      throw Error("cannot serialize a mix of annotated and unannotated records");
    }
  }
  out << schema.id_column << '\t' << schema.target_column << '\t' << schema.text_column
      << '\t' << schema.stance_column;
  if (annotated) out << '\t' << schema.opinion_column << '\t' << schema.sentiment_column;
  out << '\n';
  for (const TweetRecord& r : records) {
    out << r.id << '\t' << r.target << '\t' << r.text << '\t' << to_string(r.stance);
    if (annotated) {
      out << '\t' << static_cast<int>(*r.opinion_towards) << '\t' << to_string(*r.sentiment);
    }
    out << '\n';
  }
}

DistributionReport corpus_stats(std::span<const TweetRecord> records) {
  if (records.empty()) throw Error("corpus_stats: empty record list");
  std::size_t against = 0, favor = 0, none = 0;
  for (const TweetRecord& r : records) {
    switch (r.stance) {
      case Stance::Against: ++against; break;
      case Stance::Favor: ++favor; break;
      case Stance::None: ++none; break;
    }
  }
  DistributionReport report;
  report.total = records.size();
  report.pct_against = round_pct(against, report.total);
  report.pct_favor = round_pct(favor, report.total);
  report.pct_none = round_pct(none, report.total);
  return report;
}

std::string format_distribution(const DistributionReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "total    %zu\nagainst  %.1f%%\nfavor    %.1f%%\nnone     %.1f%%\n",
                report.total, report.pct_against, report.pct_favor, report.pct_none);
  return buf;
}

}  // namespace stance
