#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "stance/corpus.hpp"
#include "stance/features.hpp"

namespace stance {

/// A fitted Gaussian Naive Bayes stance model. Classes are kept in
/// canonical order (AGAINST < FAVOR < NONE); only classes present in the
/// training labels appear. Priors are stored in log space; variances carry
/// the smoothing floor already applied.
struct GnbModel {
  std::vector<Stance> classes;
  std::vector<double> log_priors;
  std::vector<std::vector<double>> means;      // [class][feature]
  std::vector<std::vector<double>> variances;  // [class][feature]
  FeatureSchemaPtr schema;
};

inline constexpr double kDefaultVarSmoothing = 1e-9;

/// Fits class priors and per-class/per-feature Gaussians. Priors are the
/// class relative frequencies; variances are population variances plus the
/// smoothing floor eps = var_smoothing * (largest per-feature variance over
/// the whole training set), falling back to var_smoothing itself when every
/// feature is constant. Passing var_smoothing = 0 disables smoothing.
GnbModel fit(std::span<const FeatureVector> vectors, std::span<const Stance> labels,
             double var_smoothing = kDefaultVarSmoothing);

struct Prediction {
  Stance label = Stance::None;
  std::vector<double> log_joint;  // aligned with model.classes
};

/// log_joint[c] = log prior + sum of per-feature Gaussian log densities;
/// the label is the argmax, ties resolved to the earlier class in canonical
/// order. Throws on schema mismatch.
Prediction predict(const GnbModel& model, const FeatureVector& vector);

std::vector<Stance> predict_labels(const GnbModel& model,
                                   std::span<const FeatureVector> vectors);

/// Versioned JSON serialization.
void save_model(std::ostream& out, const GnbModel& model);
GnbModel load_model(std::istream& in);

void save_model_file(const std::filesystem::path& path, const GnbModel& model);
GnbModel load_model_file(const std::filesystem::path& path);

}  // namespace stance
