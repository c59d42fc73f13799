#include "stance/gnb.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "stance/errors.hpp"

namespace stance {

namespace {

using nlohmann::json;

constexpr int kModelVersion = 1;
constexpr const char* kModelFormat = "stance-gnb-model";

void check_schema(const FeatureSchemaPtr& a, const FeatureSchemaPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error("gnb: feature schema mismatch");
}

// Population variance of one feature column, two-pass for stability.
double column_variance(std::span<const FeatureVector> vectors, std::size_t feature) {
  double mean = 0;
  for (const FeatureVector& v : vectors) mean += v.values[feature];
  mean /= static_cast<double>(vectors.size());
  double ss = 0;
  for (const FeatureVector& v : vectors) {
    const double d = v.values[feature] - mean;
    ss += d * d;
  }
  return ss / static_cast<double>(vectors.size());
}

}  // namespace

GnbModel fit(std::span<const FeatureVector> vectors, std::span<const Stance> labels,
             double var_smoothing) {
  if (vectors.empty()) throw Error("gnb: empty training set");
  if (vectors.size() != labels.size()) {
    throw Error("gnb: vectors and labels differ in length");
  }
  const FeatureSchemaPtr schema = vectors.front().schema;
  for (const FeatureVector& v : vectors) check_schema(schema, v.schema);
  const std::size_t n_features = schema->size();

  GnbModel model;
  model.schema = schema;
  for (Stance s : {Stance::Against, Stance::Favor, Stance::None}) {
    if (std::find(labels.begin(), labels.end(), s) != labels.end()) {
      model.classes.push_back(s);
    }
  }

  // Smoothing floor: a fraction of the largest per-feature variance over
  // the whole training set, so constant features keep a finite density.
  double eps = 0;
  if (var_smoothing > 0) {
    double max_var = 0;
    for (std::size_t f = 0; f < n_features; ++f) {
      max_var = std::max(max_var, column_variance(vectors, f));
    }
    eps = max_var > 0 ? var_smoothing * max_var : var_smoothing;
  }

  for (Stance cls : model.classes) {
    std::vector<double> mean(n_features, 0.0);
    std::vector<double> var(n_features, 0.0);
    std::size_t count = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (labels[i] != cls) continue;
      ++count;
      for (std::size_t f = 0; f < n_features; ++f) mean[f] += vectors[i].values[f];
    }
    for (double& m : mean) m /= static_cast<double>(count);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (labels[i] != cls) continue;
      for (std::size_t f = 0; f < n_features; ++f) {
        const double d = vectors[i].values[f] - mean[f];
        var[f] += d * d;
      }
    }
    for (double& v : var) v = v / static_cast<double>(count) + eps;

    model.log_priors.push_back(
        std::log(static_cast<double>(count) / static_cast<double>(vectors.size())));
    model.means.push_back(std::move(mean));
    model.variances.push_back(std::move(var));
  }
  return model;
}

Prediction predict(const GnbModel& model, const FeatureVector& vector) {
  check_schema(model.schema, vector.schema);
  Prediction pred;
  pred.log_joint.resize(model.classes.size());
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    double lj = model.log_priors[c];
    for (std::size_t f = 0; f < vector.values.size(); ++f) {
      const double var = model.variances[c][f];
      const double d = vector.values[f] - model.means[c][f];
      lj += -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
    }
    pred.log_joint[c] = lj;
  }
  // Argmax with strict comparison: ties go to the earlier class in
  // canonical order.
  std::size_t best = 0;
  for (std::size_t c = 1; c < pred.log_joint.size(); ++c) {
    if (pred.log_joint[c] > pred.log_joint[best]) best = c;
  }
  pred.label = model.classes[best];
  return pred;
}

std::vector<Stance> predict_labels(const GnbModel& model,
                                   std::span<const FeatureVector> vectors) {
  std::vector<Stance> labels;
  labels.reserve(vectors.size());
  for (const FeatureVector& v : vectors) labels.push_back(predict(model, v).label);
  return labels;
}

void save_model(std::ostream& out, const GnbModel& model) {
  json j;
  j["format"] = kModelFormat;
  j["version"] = kModelVersion;
  json classes = json::array();
  for (Stance s : model.classes) classes.push_back(std::string(to_string(s)));
  j["classes"] = std::move(classes);
  j["log_priors"] = model.log_priors;
  j["means"] = model.means;
  j["variances"] = model.variances;
  json schema = json::array();
  for (const auto& [group, name] : model.schema->entries) {
    schema.push_back({{"group", std::string(to_string(group))}, {"name", name}});
  }
  j["schema"] = std::move(schema);
  out << j.dump(2) << '\n';
}

GnbModel load_model(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw LoadError(std::string("model: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != kModelFormat) {
    throw LoadError("model: not a stance-gnb-model file");
  }
  if (j.value("version", 0) != kModelVersion) {
    throw LoadError("model: unsupported version " + std::to_string(j.value("version", 0)));
  }
  GnbModel model;
  try {
    for (const json& c : j.at("classes")) {
      model.classes.push_back(parse_stance(c.get<std::string>()));
    }
    model.log_priors = j.at("log_priors").get<std::vector<double>>();
    model.means = j.at("means").get<std::vector<std::vector<double>>>();
    model.variances = j.at("variances").get<std::vector<std::vector<double>>>();
    auto schema = std::make_shared<FeatureSchema>();
    for (const json& entry : j.at("schema")) {
      const auto group = parse_feature_group(entry.at("group").get<std::string>());
      if (!group) {
        throw LoadError("model: unknown feature group '" +
                        entry.at("group").get<std::string>() + "'");
      }
      schema->entries.emplace_back(*group, entry.at("name").get<std::string>());
    }
    model.schema = std::move(schema);
  } catch (const json::exception& e) {
    throw LoadError(std::string("model: ") + e.what());
  }
  const std::size_t n_classes = model.classes.size();
  if (model.log_priors.size() != n_classes || model.means.size() != n_classes ||
      model.variances.size() != n_classes) {
    throw LoadError("model: class-wise arrays disagree in length");
  }
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (model.means[c].size() != model.schema->size() ||
        model.variances[c].size() != model.schema->size()) {
      throw LoadError("model: parameter matrix does not match the schema");
    }
  }
  return model;
}

void save_model_file(const std::filesystem::path& path, const GnbModel& model) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open model file for writing: " + path.string());
  save_model(out, model);
}

GnbModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open model file: " + path.string());
  return load_model(in);
}

}  // namespace stance
