#include "stance/ablation.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "stance/errors.hpp"
#include "stance/gnb.hpp"

namespace stance {

namespace {

struct ExtractedCorpus {
  std::vector<FeatureVector> vectors;
  std::vector<Stance> labels;
};

ExtractedCorpus extract_all(std::span<const TweetRecord> records,
                            const FeatureExtractor& extractor) {
  ExtractedCorpus out;
  out.vectors.reserve(records.size());
  out.labels.reserve(records.size());
  for (const TweetRecord& r : records) {
    out.vectors.push_back(extractor.extract(r));
    out.labels.push_back(r.stance);
  }
  return out;
}

// Column indices of the subset's groups within the full candidate schema.
std::vector<std::size_t> subset_columns(const FeatureSchema& full, FeatureGroupSet subset) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < full.entries.size(); ++i) {
    if (subset.contains(full.entries[i].first)) cols.push_back(i);
  }
  return cols;
}

std::vector<FeatureVector> slice_all(const std::vector<FeatureVector>& full,
                                     const std::vector<std::size_t>& cols,
                                     const FeatureSchemaPtr& schema) {
  std::vector<FeatureVector> out;
  out.reserve(full.size());
  for (const FeatureVector& v : full) {
    FeatureVector sliced;
    sliced.schema = schema;
    sliced.values.reserve(cols.size());
    for (std::size_t c : cols) sliced.values.push_back(v.values[c]);
    out.push_back(std::move(sliced));
  }
  return out;
}

void require_annotations(std::span<const TweetRecord> records, const char* corpus_name) {
  for (const TweetRecord& r : records) {
    if (!r.has_annotations()) {
      throw ConfigError(std::string("experiment2 requires sentiment/opinion annotations, "
                                    "but record '") +
                        r.id + "' of the " + corpus_name + " corpus has none");
    }
  }
}

bool rank_before(const AblationResult& a, const AblationResult& b) {
  if (a.primary.f_avg != b.primary.f_avg) return a.primary.f_avg > b.primary.f_avg;
  if (a.groups.size() != b.groups.size()) return a.groups.size() < b.groups.size();
  return a.groups.to_vector() < b.groups.to_vector();
}

void append_metrics(std::string& line, const EvalReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "\t%.2f\t%.2f\t%.2f", r.f_avg, r.f_against, r.f_favor);
  line += buf;
}

}  // namespace

std::vector<AblationResult> run_ablation(std::span<const TweetRecord> train,
                                         std::span<const TweetRecord> test_primary,
                                         std::span<const TweetRecord> test_transfer,
                                         ExperimentSetting setting,
                                         const LexiconSet& lexicons,
                                         const TargetKnowledge& primary_kb,
                                         const TargetKnowledge* transfer_kb,
                                         std::size_t parallelism) {
  if (train.empty() || test_primary.empty()) {
    throw ConfigError("ablation needs a non-empty train and test corpus");
  }
  const bool with_transfer = !test_transfer.empty();
  if (with_transfer && transfer_kb == nullptr) {
    throw ConfigError("a transfer test corpus needs the transfer target's knowledge base");
  }
  if (setting == ExperimentSetting::Experiment2) {
    require_annotations(train, "train");
    require_annotations(test_primary, "test");
    if (with_transfer) require_annotations(test_transfer, "transfer-test");
  }

  const FeatureGroupSet candidates = candidate_groups(setting);
  const std::vector<FeatureGroup> candidate_list = candidates.to_vector();

  // Feature values do not depend on which other groups are selected, so the
  // full candidate vectors are extracted once and subsets are column slices.
  const FeatureExtractor primary_extractor(candidates, lexicons, &primary_kb);
  const ExtractedCorpus train_data = extract_all(train, primary_extractor);
  const ExtractedCorpus test_data = extract_all(test_primary, primary_extractor);
  ExtractedCorpus transfer_data;
  if (with_transfer) {
    const FeatureExtractor transfer_extractor(candidates, lexicons, transfer_kb);
    transfer_data = extract_all(test_transfer, transfer_extractor);
  }

  const std::size_t n_subsets = (std::size_t{1} << candidate_list.size()) - 1;
  std::vector<AblationResult> results(n_subsets);

  std::mutex error_mutex;
  std::exception_ptr first_error;

  const auto evaluate_subset = [&](std::size_t mask_index) {
    FeatureGroupSet subset;
    for (std::size_t b = 0; b < candidate_list.size(); ++b) {
      if ((mask_index + 1) & (std::size_t{1} << b)) subset.insert(candidate_list[b]);
    }
    const FeatureSchemaPtr schema = build_schema(subset);
    const std::vector<std::size_t> cols = subset_columns(*primary_extractor.schema(), subset);

    const auto train_x = slice_all(train_data.vectors, cols, schema);
    const GnbModel model = fit(train_x, train_data.labels);

    AblationResult result;
    result.groups = subset;
    const auto test_x = slice_all(test_data.vectors, cols, schema);
    result.primary = evaluate(predict_labels(model, test_x), test_data.labels);
    if (with_transfer) {
      const auto transfer_x = slice_all(transfer_data.vectors, cols, schema);
      result.transfer = evaluate(predict_labels(model, transfer_x), transfer_data.labels);
    }
    results[mask_index] = std::move(result);
  };

  std::size_t jobs = parallelism != 0
                         ? parallelism
                         : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  jobs = std::min(jobs, n_subsets);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n_subsets; ++i) evaluate_subset(i);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < n_subsets; i += jobs) {
          try {
            evaluate_subset(i);
          } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  std::stable_sort(results.begin(), results.end(), rank_before);
  return results;
}

std::string format_ablation_table(std::span<const AblationResult> results,
                                  std::size_t limit) {
  const bool with_transfer = !results.empty() && results.front().transfer.has_value();
  std::ostringstream out;
  char buf[64];
  out << "rank  F_avg  F_against  F_favor";
  if (with_transfer) out << "  | transfer F_avg  F_against  F_favor";
  out << "  feature set\n";
  const std::size_t n =
      limit == 0 ? results.size() : std::min<std::size_t>(limit, results.size());
  for (std::size_t i = 0; i < n; ++i) {
    const AblationResult& r = results[i];
    std::snprintf(buf, sizeof(buf), "%4zu  %5.2f  %9.2f  %7.2f", i + 1, r.primary.f_avg,
                  r.primary.f_against, r.primary.f_favor);
    out << buf;
    if (with_transfer) {
      std::snprintf(buf, sizeof(buf), "  | %14.2f  %9.2f  %7.2f", r.transfer->f_avg,
                    r.transfer->f_against, r.transfer->f_favor);
      out << buf;
    }
    out << "  " << format_groups(r.groups) << '\n';
  }
  if (n < results.size()) {
    out << "... (" << results.size() - n << " more rows)\n";
  }
  return out.str();
}

void write_ablation_tsv(std::ostream& out, std::span<const AblationResult> results) {
  const bool with_transfer = !results.empty() && results.front().transfer.has_value();
  std::string line = "rank\tgroups\tf_avg\tf_against\tf_favor";
  if (with_transfer) line += "\ttransfer_f_avg\ttransfer_f_against\ttransfer_f_favor";
  line += '\n';
  out << line;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const AblationResult& r = results[i];
    line = std::to_string(i + 1);
    line += '\t';
    line += format_groups(r.groups);
    append_metrics(line, r.primary);
    if (with_transfer) append_metrics(line, *r.transfer);
    line += '\n';
    out << line;
  }
}

}  // namespace stance
