#include "stance/metrics.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "stance/errors.hpp"

namespace stance {

namespace {

constexpr std::array<Stance, 3> kClassOrder = {Stance::Against, Stance::Favor, Stance::None};

std::size_t class_index(Stance s) { return static_cast<std::size_t>(s); }

double safe_ratio(double numerator, double denominator) {
  return denominator == 0 ? 0.0 : numerator / denominator;
}

}  // namespace

std::size_t EvalReport::total() const {
  std::size_t n = 0;
  for (const auto& row : confusion) {
    for (std::size_t cell : row) n += cell;
  }
  return n;
}

EvalReport evaluate(std::span<const Stance> predictions, std::span<const Stance> gold) {
  if (predictions.empty()) throw Error("evaluate: empty input");
  if (predictions.size() != gold.size()) {
    throw Error("evaluate: predictions and gold differ in length");
  }
  EvalReport report;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    ++report.confusion[class_index(gold[i])][class_index(predictions[i])];
  }
  for (std::size_t c = 0; c < 3; ++c) {
    const double tp = static_cast<double>(report.confusion[c][c]);
    double gold_count = 0, predicted_count = 0;
    for (std::size_t other = 0; other < 3; ++other) {
      gold_count += static_cast<double>(report.confusion[c][other]);
      predicted_count += static_cast<double>(report.confusion[other][c]);
    }
    ClassMetrics& m = report.per_class[c];
    m.precision = predicted_count == 0 ? 0.0 : 100.0 * tp / predicted_count;
    m.recall = gold_count == 0 ? 0.0 : 100.0 * tp / gold_count;
    m.f1 = safe_ratio(2.0 * m.precision * m.recall, m.precision + m.recall);
  }
  report.f_against = report.per_class[class_index(Stance::Against)].f1;
  report.f_favor = report.per_class[class_index(Stance::Favor)].f1;
  report.f_avg = (report.f_against + report.f_favor) / 2.0;
  return report;
}

std::string format_eval_report(const EvalReport& report) {
  std::ostringstream out;
  char buf[160];

  out << "confusion (gold x predicted)\n";
  out << "            AGAINST    FAVOR     NONE\n";
  for (std::size_t g = 0; g < 3; ++g) {
    std::snprintf(buf, sizeof(buf), "%-9s %9zu %8zu %8zu\n",
                  std::string(to_string(kClassOrder[g])).c_str(), report.confusion[g][0],
                  report.confusion[g][1], report.confusion[g][2]);
    out << buf;
  }
  out << "\nclass       precision   recall       F1\n";
  for (std::size_t c = 0; c < 3; ++c) {
    const ClassMetrics& m = report.per_class[c];
    std::snprintf(buf, sizeof(buf), "%-9s %11.2f %8.2f %8.2f\n",
                  std::string(to_string(kClassOrder[c])).c_str(), m.precision, m.recall, m.f1);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "\nF_against  %.2f\nF_favor    %.2f\nF_avg      %.2f\n", report.f_against,
                report.f_favor, report.f_avg);
  out << buf;
  return out.str();
}

void write_eval_report_json(std::ostream& out, const EvalReport& report) {
  nlohmann::json j;
  j["total"] = report.total();
  j["confusion"] = report.confusion;
  for (std::size_t c = 0; c < 3; ++c) {
    nlohmann::json m;
    m["precision"] = report.per_class[c].precision;
    m["recall"] = report.per_class[c].recall;
    m["f1"] = report.per_class[c].f1;
    j["per_class"][std::string(to_string(kClassOrder[c]))] = std::move(m);
  }
  j["f_against"] = report.f_against;
  j["f_favor"] = report.f_favor;
  j["f_avg"] = report.f_avg;
  out << j.dump(2) << '\n';
}

}  // namespace stance
