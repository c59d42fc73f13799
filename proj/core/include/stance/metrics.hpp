#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include "stance/corpus.hpp"

namespace stance {

struct ClassMetrics {
  double precision = 0;  // percent
  double recall = 0;
  double f1 = 0;
};

/// The SemEval-2016 Task 6 evaluation report. f_avg macro-averages the
/// FAVOR and AGAINST F1 scores only; NONE influences it only through
/// errors. All metrics are percentages.
struct EvalReport {
  // confusion[gold][predicted], both in canonical order AGAINST, FAVOR, NONE.
  std::array<std::array<std::size_t, 3>, 3> confusion{};
  std::array<ClassMetrics, 3> per_class{};
  double f_against = 0;
  double f_favor = 0;
  double f_avg = 0;

  std::size_t total() const;
};

/// Standard per-class precision/recall/F1 with 0-denominator conventions
/// (each becomes 0 when its denominator is 0). Throws on empty or
/// mismatched inputs.
EvalReport evaluate(std::span<const Stance> predictions, std::span<const Stance> gold);

/// Aligned, human-readable report (two-decimal percentages).
std::string format_eval_report(const EvalReport& report);

/// Structured (JSON) export.
void write_eval_report_json(std::ostream& out, const EvalReport& report);

}  // namespace stance
