#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stance/context_kb.hpp"
#include "stance/corpus.hpp"
#include "stance/features.hpp"
#include "stance/lexicons.hpp"
#include "stance/metrics.hpp"

namespace stance {

struct AblationResult {
  FeatureGroupSet groups;
  EvalReport primary;
  std::optional<EvalReport> transfer;
};

/// Trains and evaluates every non-empty subset of the setting's candidate
/// groups (255 subsets for experiment1, 511 for experiment2). Each subset is
/// fit on `train`, scored on `test_primary`, and, when `test_transfer` is
/// non-empty, scored on the transfer corpus with `transfer_kb` substituted
/// at feature-extraction time (the trained model is reused unchanged).
///
/// Results are sorted by descending primary f_avg, ties by smaller group
/// count, then by canonical group order. Subset evaluations may run in
/// parallel (`parallelism` threads; 0 picks the hardware concurrency); the
/// ranking is deterministic either way.
///
/// Throws ConfigError when experiment2 is requested on records lacking
/// annotation labels, or when a transfer corpus is given without its
/// knowledge base.
std::vector<AblationResult> run_ablation(std::span<const TweetRecord> train,
                                         std::span<const TweetRecord> test_primary,
                                         std::span<const TweetRecord> test_transfer,
                                         ExperimentSetting setting,
                                         const LexiconSet& lexicons,
                                         const TargetKnowledge& primary_kb,
                                         const TargetKnowledge* transfer_kb = nullptr,
                                         std::size_t parallelism = 0);

/// Aligned text table mirroring the result layout: groups, F_avg,
/// F_against, F_favor per test set. `limit` truncates the listing (0 = all).
std::string format_ablation_table(std::span<const AblationResult> results,
                                  std::size_t limit = 0);

/// Tab-separated export of the full ranking.
void write_ablation_tsv(std::ostream& out, std::span<const AblationResult> results);

}  // namespace stance
