#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace aprot {

/// Labeled design matrix: one row per sample.
struct LabeledData {
  Eigen::MatrixXd x;
  std::vector<int> y;  // class label in [0, class_count)
  std::size_t class_count = 0;
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;

  std::size_t rows() const { return static_cast<std::size_t>(x.rows()); }
  std::size_t dims() const { return static_cast<std::size_t>(x.cols()); }
};

/// Shared-covariance Gaussian discriminant fitted on standardized features.
/// Classes absent from the training data are left out of `classes`.
struct LdaModel {
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;  // all labels, present or not
  std::vector<int> classes;              // labels of the fitted classes
  Eigen::VectorXd center;                // per-feature training mean
  Eigen::VectorXd scale;                 // per-feature std, 1 for constants
  std::vector<Eigen::VectorXd> means;    // standardized class means
  Eigen::MatrixXd covariance;            // standardized, ridge included
  std::vector<double> priors;
  double ridge = 0.0;

  std::size_t dims() const { return static_cast<std::size_t>(center.size()); }
  Eigen::VectorXd standardize(const Eigen::VectorXd& x) const;
};

struct LdaOptions {
  // Ridge added to the pooled covariance, relative to trace(S)/d.
  double ridge_factor = 1e-6;
};

LdaModel fit_lda(const LabeledData& data, const LdaOptions& options = {});

/// Posterior over `model.classes`, computed in the log domain.
Eigen::VectorXd posterior(const LdaModel& model, const Eigen::VectorXd& x);
/// Label (not index) of the most probable class; ties go to the lower label.
int predict(const LdaModel& model, const Eigen::VectorXd& x);

struct AccuracyReport {
  double accuracy = 0.0;
  // confusion[true][predicted] over all labels.
  std::vector<std::vector<std::size_t>> confusion;
};

AccuracyReport evaluate(const LdaModel& model, const LabeledData& data);
double accuracy(const LdaModel& model, const LabeledData& data);

struct FeatureImportance {
  std::vector<std::string> feature_names;
  // coefficients[k] = Sigma^-1 mu_k in standardized space, per fitted class.
  std::vector<Eigen::VectorXd> coefficients;
  std::vector<double> scores;
  std::vector<std::size_t> ranking;  // feature indices, descending score
};

FeatureImportance feature_importance(const LdaModel& model);

struct SelectionRule {
  // Keep discrete features scoring at least `threshold_fraction` of the
  // maximum score over all features; `top_k` >= 0 overrides the threshold.
  double threshold_fraction = 0.1;
  int top_k = -1;
  // Selected features beyond this many are dropped, lowest score first.
  std::size_t max_features = 6;
};

struct ReducedFeatureSet {
  // Indices into the discrete (topology) feature list, ranked by score.
  std::vector<std::size_t> discrete;
  std::vector<std::string> names;
  std::vector<std::string> local{"I_F", "V_F"};
  double threshold = 0.0;
  std::size_t truncated = 0;  // selected features dropped by the cap
  bool empty_warning = false;
};

/// `discrete_count` leading features of the model are the discrete ones.
ReducedFeatureSet select_features(const FeatureImportance& imp, std::size_t discrete_count,
                                  const SelectionRule& rule = {});

struct PlateauRow {
  std::size_t count = 0;     // features used
  std::string added;         // feature added at this step
  double accuracy = 0.0;
};

/// Training accuracy when the classifier sees the first k ranked features,
/// for k = 1..d.
std::vector<PlateauRow> accuracy_plateau(const LabeledData& data, const std::vector<std::size_t>& ranking,
                                         const LdaOptions& options = {});

/// Column subset of a data set.
LabeledData select_columns(const LabeledData& data, const std::vector<std::size_t>& columns);

}  // namespace aprot
