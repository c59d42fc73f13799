// Command-line front end: wires corpora, lexica, knowledge bases, training,
// evaluation, and ablation together.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stance/ablation.hpp"
#include "stance/context_kb.hpp"
#include "stance/corpus.hpp"
#include "stance/errors.hpp"
#include "stance/features.hpp"
#include "stance/gnb.hpp"
#include "stance/lexicons.hpp"
#include "stance/metrics.hpp"

namespace fs = std::filesystem;

namespace {

// Outputs are composed in memory and written through a temporary file, so a
// failing run leaves no partial artifact behind.
void write_file(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw stance::Error("cannot open output file: " + path.string());
    out << content;
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw stance::Error("failed writing output file: " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw stance::Error("cannot move output into place: " + path.string());
  }
}

struct LexiconOptions {
  std::string afinn, hl_pos, hl_neg, liwc, dal;
  std::string dir;

  void attach(CLI::App* cmd) {
    cmd->add_option("--afinn", afinn, "AFINN polarity lexicon (word<TAB>value)");
    cmd->add_option("--hl-pos", hl_pos, "Positive opinion wordlist");
    cmd->add_option("--hl-neg", hl_neg, "Negative opinion wordlist");
    cmd->add_option("--liwc", liwc, "Category lexicon (category<TAB>pattern)");
    cmd->add_option("--dal", dal, "Affect dictionary (word<TAB>p<TAB>a<TAB>i)");
    cmd->add_option("--lexicon-dir", dir,
                    "Directory searched for afinn.txt, hl_positive.txt, hl_negative.txt, "
                    "liwc_categories.txt, dal.txt when the per-file flags are not given")
        ->envname("STANCE_LEXICON_DIR");
  }

  stance::LexiconPaths resolve() const {
    stance::LexiconPaths paths;
    const auto pick = [&](const std::string& flag,
                          const char* name) -> std::optional<fs::path> {
      if (!flag.empty()) return fs::path(flag);
      if (!dir.empty()) {
        const fs::path candidate = fs::path(dir) / name;
        if (fs::exists(candidate)) return candidate;
      }
      return std::nullopt;
    };
    paths.afinn = pick(afinn, "afinn.txt");
    paths.hl_positive = pick(hl_pos, "hl_positive.txt");
    paths.hl_negative = pick(hl_neg, "hl_negative.txt");
    paths.liwc = pick(liwc, "liwc_categories.txt");
    paths.dal = pick(dal, "dal.txt");
    return paths;
  }
};

struct KbOptions {
  std::string kb, rival_kb;
  std::string dir;

  void attach(CLI::App* cmd) {
    cmd->add_option("--kb", kb, "Knowledge file of the target of interest");
    cmd->add_option("--rival-kb", rival_kb, "Knowledge file of the rival target");
    cmd->add_option("--kb-dir", dir, "Directory searched for knowledge files")
        ->envname("STANCE_KB_DIR");
  }

  fs::path resolve_one(const std::string& value, const char* flag) const {
    if (value.empty()) throw stance::ConfigError(std::string("missing ") + flag);
    fs::path p(value);
    if (fs::exists(p)) return p;
    if (!dir.empty() && p.is_relative()) {
      const fs::path candidate = fs::path(dir) / p;
      if (fs::exists(candidate)) return candidate;
    }
    throw stance::ConfigError(std::string("knowledge file not found: ") + value);
  }

  // Primary knowledge plus the rival's, each built with the other as rival.
  std::pair<stance::TargetKnowledge, stance::TargetKnowledge> load() const {
    const stance::TargetSpec primary = stance::load_target_spec(resolve_one(kb, "--kb"));
    const stance::TargetSpec rival =
        stance::load_target_spec(resolve_one(rival_kb, "--rival-kb"));
    return {stance::build_knowledge(primary, &rival),
            stance::build_knowledge(rival, &primary)};
  }
};

stance::CorpusSchema schema_for(const std::string& target) {
  stance::CorpusSchema schema;
  if (!target.empty()) schema.target_filter = target;
  return schema;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

struct PredictionRow {
  std::string id;
  stance::Stance gold;
  stance::Stance predicted;
};

std::vector<PredictionRow> read_predictions(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw stance::LoadError("cannot open predictions file: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw stance::LoadError(path.string() + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_tabs(line);
  std::size_t id_col = std::string::npos, gold_col = std::string::npos,
              pred_col = std::string::npos;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "id") id_col = i;
    if (header[i] == "gold") gold_col = i;
    if (header[i] == "predicted") pred_col = i;
  }
  if (id_col == std::string::npos || gold_col == std::string::npos ||
      pred_col == std::string::npos) {
    throw stance::SchemaError(path.string() + ": needs columns id, gold, predicted");
  }
  std::vector<PredictionRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != header.size()) {
      throw stance::RowError(path.string() + ": row " + std::to_string(line_no) +
                             ": wrong field count");
    }
    PredictionRow row;
    row.id = fields[id_col];
    row.gold = stance::parse_stance(fields[gold_col]);
    row.predicted = stance::parse_stance(fields[pred_col]);
    rows.push_back(std::move(row));
  }
  return rows;
}

void append_double(std::string& out, double value) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof(buf), "%.17g", value);
  out.append(buf, static_cast<std::size_t>(n));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stance detection for political tweets: lexicon, structural, and "
               "friend/enemy context features feeding a Gaussian Naive Bayes classifier"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read options from an INI/TOML file; sections name subcommands");

  // ---- stats ----------------------------------------------------------
  auto* stats_cmd = app.add_subcommand("stats", "Print the stance distribution of a corpus");
  stats_cmd->fallthrough();
  std::string stats_corpus, stats_target;
  stats_cmd->add_option("--corpus", stats_corpus, "Tab-separated corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  stats_cmd->add_option("--target", stats_target, "Keep only rows with this target");
  stats_cmd->callback([&] {
    const auto records = stance::load_corpus(stats_corpus, schema_for(stats_target));
    std::cout << stance::format_distribution(stance::corpus_stats(records));
  });

  // ---- extract --------------------------------------------------------
  auto* extract_cmd =
      app.add_subcommand("extract", "Write the feature table for a corpus");
  extract_cmd->fallthrough();
  std::string extract_corpus, extract_target, extract_groups, extract_out;
  LexiconOptions extract_lex;
  KbOptions extract_kb;
  extract_cmd->add_option("--corpus", extract_corpus, "Tab-separated corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  extract_cmd->add_option("--target", extract_target, "Keep only rows with this target");
  extract_cmd->add_option("--groups", extract_groups, "Feature groups, e.g. 'AFINN HL context_based'")
      ->required();
  extract_cmd->add_option("--out", extract_out, "Output TSV path")->required();
  extract_lex.attach(extract_cmd);
  extract_kb.attach(extract_cmd);
  extract_cmd->callback([&] {
    const auto groups = stance::parse_groups(extract_groups);
    if (groups.empty()) throw stance::ConfigError("no feature groups selected");
    const auto records = stance::load_corpus(extract_corpus, schema_for(extract_target));
    const auto lexicons = stance::load_lexicons(extract_lex.resolve(), &std::cerr);
    std::optional<stance::TargetKnowledge> kb;
    if (groups.contains(stance::FeatureGroup::ContextBased)) {
      kb = extract_kb.load().first;
    }
    const stance::FeatureExtractor extractor(groups, lexicons, kb ? &*kb : nullptr);
    std::vector<stance::FeatureVector> vectors;
    vectors.reserve(records.size());
    for (const auto& r : records) vectors.push_back(extractor.extract(r));
    std::ostringstream out;
    stance::write_feature_table(out, records, vectors);
    write_file(extract_out, out.str());
    std::cout << "wrote " << vectors.size() << " feature vectors to " << extract_out << '\n';
  });

  // ---- train ----------------------------------------------------------
  auto* train_cmd = app.add_subcommand("train", "Fit a Gaussian Naive Bayes model");
  train_cmd->fallthrough();
  std::string train_corpus, train_target, train_groups, train_out;
  LexiconOptions train_lex;
  KbOptions train_kb;
  train_cmd->add_option("--corpus", train_corpus, "Training corpus")
      ->required()
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--target", train_target, "Keep only rows with this target");
  train_cmd->add_option("--groups", train_groups, "Feature groups to train on")->required();
  train_cmd->add_option("--out", train_out, "Output model path")->required();
  train_lex.attach(train_cmd);
  train_kb.attach(train_cmd);
  train_cmd->callback([&] {
    const auto groups = stance::parse_groups(train_groups);
    if (groups.empty()) throw stance::ConfigError("no feature groups selected");
    const auto records = stance::load_corpus(train_corpus, schema_for(train_target));
    const auto lexicons = stance::load_lexicons(train_lex.resolve(), &std::cerr);
    std::optional<stance::TargetKnowledge> kb;
    if (groups.contains(stance::FeatureGroup::ContextBased)) {
      kb = train_kb.load().first;
    }
    const stance::FeatureExtractor extractor(groups, lexicons, kb ? &*kb : nullptr);
    std::vector<stance::FeatureVector> vectors;
    std::vector<stance::Stance> labels;
    vectors.reserve(records.size());
    for (const auto& r : records) {
      vectors.push_back(extractor.extract(r));
      labels.push_back(r.stance);
    }
    const stance::GnbModel model = stance::fit(vectors, labels);
    std::ostringstream out;
    stance::save_model(out, model);
    write_file(train_out, out.str());
    std::cout << "trained on " << vectors.size() << " records; model written to "
              << train_out << '\n';
  });

  // ---- predict --------------------------------------------------------
  auto* predict_cmd =
      app.add_subcommand("predict", "Label a corpus with a trained model");
  predict_cmd->fallthrough();
  std::string predict_model, predict_corpus, predict_target, predict_out;
  LexiconOptions predict_lex;
  KbOptions predict_kb;
  predict_cmd->add_option("--model", predict_model, "Model file from 'train'")
      ->required()
      ->check(CLI::ExistingFile);
  predict_cmd->add_option("--corpus", predict_corpus, "Corpus to label")
      ->required()
      ->check(CLI::ExistingFile);
  predict_cmd->add_option("--target", predict_target, "Keep only rows with this target");
  predict_cmd->add_option("--out", predict_out, "Output predictions TSV")->required();
  predict_lex.attach(predict_cmd);
  predict_kb.attach(predict_cmd);
  predict_cmd->callback([&] {
    const stance::GnbModel model = stance::load_model_file(predict_model);
    // The model schema fixes the feature groups; re-extract with them.
    stance::FeatureGroupSet groups;
    for (const auto& [group, name] : model.schema->entries) groups.insert(group);
    const auto records = stance::load_corpus(predict_corpus, schema_for(predict_target));
    const auto lexicons = stance::load_lexicons(predict_lex.resolve(), &std::cerr);
    std::optional<stance::TargetKnowledge> kb;
    if (groups.contains(stance::FeatureGroup::ContextBased)) {
      kb = predict_kb.load().first;
    }
    const stance::FeatureExtractor extractor(groups, lexicons, kb ? &*kb : nullptr);

    std::string out = "id\tgold\tpredicted";
    for (stance::Stance s : model.classes) {
      out += "\tlog_joint_";
      out += to_string(s);
    }
    out += '\n';
    for (const auto& r : records) {
      const stance::Prediction p = stance::predict(model, extractor.extract(r));
      out += r.id;
      out += '\t';
      out += to_string(r.stance);
      out += '\t';
      out += to_string(p.label);
      for (double lj : p.log_joint) {
        out += '\t';
        append_double(out, lj);
      }
      out += '\n';
    }
    write_file(predict_out, out);
    std::cout << "wrote " << records.size() << " predictions to " << predict_out << '\n';
  });

  // ---- evaluate -------------------------------------------------------
  auto* eval_cmd = app.add_subcommand(
      "evaluate", "Score a predictions file with the SemEval-2016 Task 6 measure");
  eval_cmd->fallthrough();
  std::string eval_predictions, eval_corpus, eval_target, eval_out;
  eval_cmd->add_option("--predictions", eval_predictions, "TSV from 'predict'")
      ->required()
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--corpus", eval_corpus,
                       "Optional gold corpus cross-checked against the predictions file")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--target", eval_target, "Keep only rows with this target");
  eval_cmd->add_option("--out", eval_out, "Optional JSON report path");
  eval_cmd->callback([&] {
    const auto rows = read_predictions(eval_predictions);
    if (rows.empty()) throw stance::Error("predictions file has no rows");
    std::vector<stance::Stance> predicted, gold;
    predicted.reserve(rows.size());
    gold.reserve(rows.size());
    for (const auto& r : rows) {
      predicted.push_back(r.predicted);
      gold.push_back(r.gold);
    }
    if (!eval_corpus.empty()) {
      const auto records = stance::load_corpus(eval_corpus, schema_for(eval_target));
      if (records.size() != rows.size()) {
        throw stance::Error("gold corpus and predictions differ in length");
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (records[i].id != rows[i].id || records[i].stance != rows[i].gold) {
          throw stance::Error("predictions row " + std::to_string(i + 2) +
                              " does not match the gold corpus");
        }
      }
    }
    const stance::EvalReport report = stance::evaluate(predicted, gold);
    std::cout << stance::format_eval_report(report);
    if (!eval_out.empty()) {
      std::ostringstream out;
      stance::write_eval_report_json(out, report);
      write_file(eval_out, out.str());
    }
  });

  // ---- ablate ---------------------------------------------------------
  auto* ablate_cmd = app.add_subcommand(
      "ablate", "Train and rank every feature-group subset (255 or 511 fits)");
  ablate_cmd->fallthrough();
  std::string ablate_train, ablate_test, ablate_transfer, ablate_setting, ablate_out;
  std::string ablate_target, ablate_transfer_target;
  std::size_t ablate_jobs = 0, ablate_top = 10;
  LexiconOptions ablate_lex;
  KbOptions ablate_kb;
  ablate_cmd->add_option("--train", ablate_train, "Training corpus")
      ->required()
      ->check(CLI::ExistingFile);
  ablate_cmd->add_option("--test", ablate_test, "Primary test corpus")
      ->required()
      ->check(CLI::ExistingFile);
  ablate_cmd->add_option("--transfer-test", ablate_transfer,
                         "Optional second test corpus scored with the rival knowledge base")
      ->check(CLI::ExistingFile);
  ablate_cmd->add_option("--setting", ablate_setting, "experiment1 or experiment2")
      ->required();
  ablate_cmd->add_option("--target", ablate_target, "Target filter for train/test");
  ablate_cmd->add_option("--transfer-target", ablate_transfer_target,
                         "Target filter for the transfer corpus");
  ablate_cmd->add_option("--jobs", ablate_jobs, "Worker threads (0 = hardware)");
  ablate_cmd->add_option("--top", ablate_top, "Rows shown on stdout (0 = all)");
  ablate_cmd->add_option("--out", ablate_out, "Ranked table TSV path")->required();
  ablate_lex.attach(ablate_cmd);
  ablate_kb.attach(ablate_cmd);
  ablate_cmd->callback([&] {
    const auto setting = stance::parse_experiment_setting(ablate_setting);
    if (!setting) {
      throw stance::ConfigError("unknown setting '" + ablate_setting +
                                "' (use experiment1 or experiment2)");
    }
    const auto train = stance::load_corpus(ablate_train, schema_for(ablate_target));
    const auto test = stance::load_corpus(ablate_test, schema_for(ablate_target));
    std::vector<stance::TweetRecord> transfer;
    if (!ablate_transfer.empty()) {
      transfer = stance::load_corpus(ablate_transfer, schema_for(ablate_transfer_target));
    }
    const auto lexicons = stance::load_lexicons(ablate_lex.resolve(), &std::cerr);
    const auto [primary_kb, rival_kb] = ablate_kb.load();
    const auto results = stance::run_ablation(
        train, test, transfer, *setting, lexicons, primary_kb,
        transfer.empty() ? nullptr : &rival_kb, ablate_jobs);
    std::ostringstream out;
    stance::write_ablation_tsv(out, results);
    write_file(ablate_out, out.str());
    std::cout << stance::format_ablation_table(results, ablate_top);
    std::cout << "full ranking (" << results.size() << " subsets) written to " << ablate_out
              << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
