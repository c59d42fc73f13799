#include <benchmark/benchmark.h>

#include "stance/ablation.hpp"
#include "stance/features.hpp"
#include "stance/gnb.hpp"
#include "stance/tokenizer.hpp"
#include "support/paths.hpp"

namespace {

const char* kSampleTweet =
    "@HillaryClinton your plan is great, really great!! #Vote2016 #ImWithHer "
    "see http://example.com/news?id=42 tonight; she has my vote.";

void BM_Tokenize(benchmark::State& state) {
  for (auto _ : state) {
    auto tokens = stance::tokenize(kSampleTweet);
    benchmark::DoNotOptimize(tokens);
  }
}
BENCHMARK(BM_Tokenize);

void BM_AssembleVector(benchmark::State& state) {
  const auto lexicons = testsupport::fixture_lexicons();
  const auto kb = testsupport::clinton_kb();
  const auto records = testsupport::fixture_corpus();
  const stance::FeatureExtractor extractor(stance::FeatureGroupSet::all(), lexicons, &kb);
  std::size_t i = 0;
  for (auto _ : state) {
    auto vec = extractor.extract(records[i++ % records.size()]);
    benchmark::DoNotOptimize(vec);
  }
}
BENCHMARK(BM_AssembleVector);

void BM_GnbFitPredict(benchmark::State& state) {
  const auto lexicons = testsupport::fixture_lexicons();
  const auto kb = testsupport::clinton_kb();
  const auto records = testsupport::fixture_corpus();
  const stance::FeatureExtractor extractor(stance::FeatureGroupSet::all(), lexicons, &kb);
  std::vector<stance::FeatureVector> vectors;
  std::vector<stance::Stance> labels;
  for (const auto& r : records) {
    vectors.push_back(extractor.extract(r));
    labels.push_back(r.stance);
  }
  for (auto _ : state) {
    const auto model = stance::fit(vectors, labels);
    auto predicted = stance::predict_labels(model, vectors);
    benchmark::DoNotOptimize(predicted);
  }
}
BENCHMARK(BM_GnbFitPredict);

void BM_AblationExperiment2(benchmark::State& state) {
  const auto lexicons = testsupport::fixture_lexicons();
  const auto kb = testsupport::clinton_kb();
  std::vector<stance::TweetRecord> train, test;
  for (const auto& r : testsupport::fixture_corpus()) {
    (std::stoul(r.id) % 2 == 0 ? train : test).push_back(r);
  }
  for (auto _ : state) {
    auto results = stance::run_ablation(train, test, {},
                                        stance::ExperimentSetting::Experiment2, lexicons, kb,
                                        nullptr, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(results);
  }
}
BENCHMARK(BM_AblationExperiment2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
