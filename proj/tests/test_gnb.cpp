#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "stance/errors.hpp"
#include "stance/gnb.hpp"
#include "support/gnb_oracle.hpp"
#include "support/paths.hpp"

using namespace stance;

TEST_SUITE_BEGIN("gnb");

namespace {

FeatureVector make_vector(const FeatureSchemaPtr& schema, std::vector<double> values) {
  FeatureVector v;
  v.schema = schema;
  v.values = std::move(values);
  return v;
}

FeatureSchemaPtr single_feature_schema() { return build_schema({FeatureGroup::Afinn}); }

// Features of the fixture corpus, one vector and label per record.
struct FixtureData {
  std::vector<FeatureVector> vectors;
  std::vector<Stance> labels;
};

FixtureData fixture_features(FeatureGroupSet groups) {
  const LexiconSet lexicons = testsupport::fixture_lexicons();
  const TargetKnowledge kb = testsupport::clinton_kb();
  const FeatureExtractor extractor(groups, lexicons, &kb);
  FixtureData data;
  for (const auto& r : testsupport::fixture_corpus()) {
    data.vectors.push_back(extractor.extract(r));
    data.labels.push_back(r.stance);
  }
  return data;
}

}  // namespace

TEST_CASE("fit recovers hand-computed statistics") {
  const auto schema = single_feature_schema();
  const std::vector<FeatureVector> x = {
      make_vector(schema, {0}), make_vector(schema, {2}),
      make_vector(schema, {10}), make_vector(schema, {12})};
  const std::vector<Stance> y = {Stance::Against, Stance::Against, Stance::Favor,
                                 Stance::Favor};
  const GnbModel model = fit(x, y);
  REQUIRE(model.classes == std::vector<Stance>{Stance::Against, Stance::Favor});
  CHECK(model.means[0][0] == 1.0);
  CHECK(model.means[1][0] == 11.0);
  CHECK(model.variances[0][0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(model.variances[1][0] == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::exp(model.log_priors[0]) == doctest::Approx(0.5));
  CHECK(std::exp(model.log_priors[1]) == doctest::Approx(0.5));

  SUBCASE("points nearer a class mean take that class") {
    CHECK(predict(model, make_vector(schema, {1.5})).label == Stance::Against);
    CHECK(predict(model, make_vector(schema, {10.5})).label == Stance::Favor);
  }
  SUBCASE("the exact midpoint ties to the first class in canonical order") {
    const Prediction p = predict(model, make_vector(schema, {6.0}));
    CHECK(p.log_joint[0] == p.log_joint[1]);
    CHECK(p.label == Stance::Against);
  }
}

TEST_CASE("a single-class model always predicts that class") {
  const auto schema = single_feature_schema();
  const std::vector<FeatureVector> x = {make_vector(schema, {1}), make_vector(schema, {2})};
  const std::vector<Stance> y = {Stance::Favor, Stance::Favor};
  const GnbModel model = fit(x, y);
  REQUIRE(model.classes == std::vector<Stance>{Stance::Favor});
  CHECK(predict(model, make_vector(schema, {-100})).label == Stance::Favor);
  CHECK(std::exp(model.log_priors[0]) == doctest::Approx(1.0));
}

TEST_CASE("a class-constant feature gets the smoothing floor, keeping densities finite") {
  const auto schema = single_feature_schema();
  const std::vector<FeatureVector> x = {make_vector(schema, {5}), make_vector(schema, {5}),
                                        make_vector(schema, {1}), make_vector(schema, {3})};
  const std::vector<Stance> y = {Stance::Against, Stance::Against, Stance::Favor,
                                 Stance::Favor};
  const GnbModel model = fit(x, y);
  // Whole-set variance of {5,5,1,3} is 2.75, so eps = 2.75e-9.
  CHECK(model.variances[0][0] == doctest::Approx(2.75e-9).epsilon(1e-9));
  const Prediction p = predict(model, make_vector(schema, {5.0}));
  CHECK(std::isfinite(p.log_joint[0]));
  CHECK(std::isfinite(p.log_joint[1]));
}

TEST_CASE("fit validates its input") {
  const auto schema = single_feature_schema();
  CHECK_THROWS_AS(fit({}, {}), Error);
  const std::vector<FeatureVector> x = {make_vector(schema, {1})};
  CHECK_THROWS_AS(fit(x, std::vector<Stance>{}), Error);

  const std::vector<FeatureVector> mixed = {
      make_vector(schema, {1}), make_vector(build_schema({FeatureGroup::Hl}), {1})};
  CHECK_THROWS_AS(fit(mixed, std::vector<Stance>{Stance::Favor, Stance::None}), Error);
}

TEST_CASE("predict rejects a vector with a different schema") {
  const auto schema = single_feature_schema();
  const std::vector<FeatureVector> x = {make_vector(schema, {0}), make_vector(schema, {4})};
  const std::vector<Stance> y = {Stance::Against, Stance::Favor};
  const GnbModel model = fit(x, y);
  CHECK_THROWS_AS(predict(model, make_vector(build_schema({FeatureGroup::Hl}), {0})), Error);
}

namespace {

struct RandomInstance {
  std::vector<FeatureVector> vectors;
  std::vector<Stance> labels;
  std::vector<double> query;
};

// Random instances sized per the oracle-equivalence criterion: up to 5
// features, up to 20 examples, 3 classes. Per-class feature columns are
// regenerated until they vary, keeping log densities well away from the
// magnitudes where double rounding would swamp a 1e-9 comparison.
RandomInstance random_instance(std::mt19937& rng, const FeatureSchemaPtr* schemas) {
  std::uniform_int_distribution<int> feature_count(1, 5);
  std::uniform_int_distribution<int> example_count(6, 20);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  std::uniform_real_distribution<double> query_value(-2.0, 12.0);

  RandomInstance inst;
  const int n_features = feature_count(rng);
  const int n_examples = example_count(rng);
  const FeatureSchemaPtr schema = schemas[n_features - 1];

  inst.labels.resize(n_examples);
  const Stance all[3] = {Stance::Against, Stance::Favor, Stance::None};
  for (int i = 0; i < n_examples; ++i) inst.labels[i] = all[i % 3];
  std::shuffle(inst.labels.begin(), inst.labels.end(), rng);

  inst.vectors.resize(n_examples);
  for (int i = 0; i < n_examples; ++i) {
    inst.vectors[i].schema = schema;
    inst.vectors[i].values.resize(n_features);
  }
  for (Stance cls : all) {
    std::vector<int> rows;
    for (int i = 0; i < n_examples; ++i) {
      if (inst.labels[i] == cls) rows.push_back(i);
    }
    for (int f = 0; f < n_features; ++f) {
      while (true) {
        double mean = 0;
        for (int r : rows) {
          inst.vectors[r].values[f] = value(rng);
          mean += inst.vectors[r].values[f];
        }
        mean /= static_cast<double>(rows.size());
        double var = 0;
        for (int r : rows) {
          const double d = inst.vectors[r].values[f] - mean;
          var += d * d;
        }
        if (var / static_cast<double>(rows.size()) > 0.05) break;
      }
    }
  }
  for (int f = 0; f < n_features; ++f) inst.query.push_back(query_value(rng));
  return inst;
}

}  // namespace

TEST_CASE("predict matches the brute-force density oracle on random instances") {
  FeatureSchemaPtr schemas[5] = {
      build_schema({FeatureGroup::Afinn}),
      build_schema({FeatureGroup::Afinn, FeatureGroup::Hl}),
      build_schema({FeatureGroup::Afinn, FeatureGroup::Hl, FeatureGroup::Liwc}),
      build_schema(
          {FeatureGroup::Afinn, FeatureGroup::Hl, FeatureGroup::Liwc, FeatureGroup::Hashtag}),
      build_schema({FeatureGroup::Afinn, FeatureGroup::Hl, FeatureGroup::Liwc,
                    FeatureGroup::Hashtag, FeatureGroup::Mention}),
  };
  std::mt19937 rng(1234);
  for (int iter = 0; iter < 100; ++iter) {
    const RandomInstance inst = random_instance(rng, schemas);
    const GnbModel model = fit(inst.vectors, inst.labels);

    FeatureVector q;
    q.schema = inst.vectors.front().schema;
    q.values = inst.query;
    const Prediction p = predict(model, q);

    std::vector<std::vector<double>> rows;
    for (const auto& v : inst.vectors) rows.push_back(v.values);
    const auto oracle = testsupport::oracle_gnb_predict(rows, inst.labels, inst.query);

    REQUIRE(oracle.classes == model.classes);
    CHECK(p.label == oracle.label);
    for (std::size_t c = 0; c < oracle.log_joint.size(); ++c) {
      CHECK(std::abs(p.log_joint[c] - static_cast<double>(oracle.log_joint[c])) < 1e-9);
    }
  }
}

TEST_CASE("fit and predict reproduce the oracle on the fixture corpus") {
  const FixtureData data = fixture_features(FeatureGroupSet::all());
  const GnbModel model = fit(data.vectors, data.labels);
  std::vector<std::vector<double>> rows;
  for (const auto& v : data.vectors) rows.push_back(v.values);
  for (const auto& v : data.vectors) {
    const auto oracle = testsupport::oracle_gnb_predict(rows, data.labels, v.values);
    CHECK(predict(model, v).label == oracle.label);
  }
}

TEST_CASE("normalized posteriors sum to one") {
  const FixtureData data = fixture_features(FeatureGroupSet::all());
  const GnbModel model = fit(data.vectors, data.labels);
  for (const auto& v : data.vectors) {
    const Prediction p = predict(model, v);
    const double max_lj = *std::max_element(p.log_joint.begin(), p.log_joint.end());
    double z = 0;
    for (double lj : p.log_joint) z += std::exp(lj - max_lj);
    double sum = 0;
    for (double lj : p.log_joint) sum += std::exp(lj - max_lj) / z;
    CHECK(std::abs(sum - 1.0) < 1e-9);
  }
}

TEST_CASE("training order does not move the parameters") {
  const FixtureData data = fixture_features(FeatureGroupSet::all());
  const GnbModel base = fit(data.vectors, data.labels);

  std::vector<std::size_t> order(data.vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937 rng(77);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<FeatureVector> shuffled_x;
  std::vector<Stance> shuffled_y;
  for (std::size_t i : order) {
    shuffled_x.push_back(data.vectors[i]);
    shuffled_y.push_back(data.labels[i]);
  }
  const GnbModel shuffled = fit(shuffled_x, shuffled_y);

  REQUIRE(shuffled.classes == base.classes);
  for (std::size_t c = 0; c < base.classes.size(); ++c) {
    CHECK(std::abs(shuffled.log_priors[c] - base.log_priors[c]) < 1e-12);
    for (std::size_t f = 0; f < base.means[c].size(); ++f) {
      CHECK(std::abs(shuffled.means[c][f] - base.means[c][f]) < 1e-12);
      CHECK(std::abs(shuffled.variances[c][f] - base.variances[c][f]) < 1e-12);
    }
  }
}

namespace {

std::vector<Stance> labels_with_scaled_feature(const FixtureData& data, std::size_t feature,
                                               double scale, double var_smoothing) {
  std::vector<FeatureVector> scaled = data.vectors;
  for (auto& v : scaled) v.values[feature] *= scale;
  const GnbModel model = fit(scaled, data.labels, var_smoothing);
  return predict_labels(model, scaled);
}

}  // namespace

TEST_CASE("scaling one feature never moves the argmax when smoothing is off") {
  // These groups all vary within every fixture class, so variances stay
  // positive with eps = 0.
  const FixtureData data =
      fixture_features({FeatureGroup::Afinn, FeatureGroup::Hl, FeatureGroup::Hashtag,
                        FeatureGroup::Mention, FeatureGroup::PunctMarks});
  const GnbModel unscaled = fit(data.vectors, data.labels, 0.0);
  for (const auto& per_class : unscaled.variances) {
    for (double var : per_class) REQUIRE(var > 0);
  }
  const std::vector<Stance> base = predict_labels(unscaled, data.vectors);
  for (std::size_t f = 0; f < data.vectors.front().values.size(); ++f) {
    for (double scale : {0.5, 2.0, 7.0}) {
      CHECK(labels_with_scaled_feature(data, f, scale, 0.0) == base);
    }
  }
}

TEST_CASE("with default smoothing, moderate rescaling keeps the fixture labels") {
  const FixtureData data =
      fixture_features({FeatureGroup::Afinn, FeatureGroup::Hl, FeatureGroup::Hashtag,
                        FeatureGroup::Mention, FeatureGroup::PunctMarks});
  const GnbModel model = fit(data.vectors, data.labels);
  const std::vector<Stance> base = predict_labels(model, data.vectors);
  for (std::size_t f = 0; f < data.vectors.front().values.size(); ++f) {
    for (double scale : {0.5, 2.0}) {
      CHECK(labels_with_scaled_feature(data, f, scale, kDefaultVarSmoothing) == base);
    }
  }
}

TEST_CASE("models round-trip through the serialized form") {
  const FixtureData data = fixture_features(FeatureGroupSet::all());
  const GnbModel model = fit(data.vectors, data.labels);

  std::stringstream buffer;
  save_model(buffer, model);
  const GnbModel loaded = load_model(buffer);

  CHECK(loaded.classes == model.classes);
  CHECK(*loaded.schema == *model.schema);
  CHECK(loaded.log_priors == model.log_priors);
  CHECK(loaded.means == model.means);
  CHECK(loaded.variances == model.variances);
  for (const auto& v : data.vectors) {
    CHECK(predict(loaded, v).label == predict(model, v).label);
  }
}

TEST_CASE("loading rejects foreign or future files") {
  std::stringstream not_a_model("{\"format\": \"something-else\"}");
  CHECK_THROWS_AS(load_model(not_a_model), LoadError);
  std::stringstream future(
      "{\"format\": \"stance-gnb-model\", \"version\": 99, \"classes\": []}");
  CHECK_THROWS_AS(load_model(future), LoadError);
  std::stringstream garbage("not json");
  CHECK_THROWS_AS(load_model(garbage), LoadError);
}

TEST_SUITE_END();
