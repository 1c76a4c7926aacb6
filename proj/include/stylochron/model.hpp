#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/stats.hpp"

namespace stylochron {

struct FeatureMatrix {
  std::vector<std::string> ids;      // row order follows the manifest
  std::vector<std::string> columns;  // descriptor names, catalog order
  Eigen::MatrixXd values;            // ids.size() rows x columns.size() cols
};

/// Per-column z-scoring fitted on a training set. Constant columns keep
/// std 0 and normalize to 0 so they cannot influence distances.
struct Normalizer {
  Eigen::VectorXd mean;
  Eigen::VectorXd stddev;  // sample std; 0 marks a constant column

  Eigen::VectorXd apply(Eigen::Ref<const Eigen::VectorXd> row) const;
  Eigen::MatrixXd apply_rows(const Eigen::MatrixXd& rows) const;
  Eigen::VectorXd unapply(Eigen::Ref<const Eigen::VectorXd> row) const;
};

Normalizer fit_normalizer(const Eigen::MatrixXd& train);

enum class WeightScheme {
  abs_r,      // |pearson r|
  r_squared,  // r^2
};

/// Per-column |Pearson r| (or r^2) against the target years. Columns where
/// the correlation is undefined get weight 0.
Eigen::VectorXd regression_weights(const Eigen::MatrixXd& train,
                                   Eigen::Ref<const Eigen::VectorXd> years,
                                   WeightScheme scheme = WeightScheme::abs_r);

/// Inverse-distance-weighted k-nearest-neighbor estimate. Distance ties are
/// broken by row index. Neighbors at distance exactly 0 short-circuit the
/// vote: the prediction is the mean of their years.
double wnn_predict(const Eigen::MatrixXd& train, Eigen::Ref<const Eigen::VectorXd> years,
                   Eigen::Ref<const Eigen::VectorXd> weights,
                   Eigen::Ref<const Eigen::VectorXd> query, int k);

struct PredictionRow {
  std::string id;
  int actual_year = 0;
  double predicted_year = 0.0;
};

struct RegressionResult {
  std::vector<PredictionRow> rows;  // one per document, matrix order
  CorrelationResult summary;        // pearson of (actual, predicted)
};

struct FoldModel {
  Normalizer normalizer;
  Eigen::VectorXd weights;
};

/// Model fitted with row `exclude` held out. The held-out row's values never
/// enter the normalizer or the weights.
FoldModel fit_fold(const FeatureMatrix& matrix, const std::vector<int>& years,
                   std::size_t exclude, WeightScheme scheme = WeightScheme::abs_r);

RegressionResult loo_predict_years(const FeatureMatrix& matrix,
                                   const std::vector<int>& years, int k,
                                   WeightScheme scheme = WeightScheme::abs_r,
                                   int jobs = 1);

/// Per-column |Welch t| between the two classes (labels are 0/1). Columns
/// where the test is undefined get weight 0.
Eigen::VectorXd classification_weights(const Eigen::MatrixXd& train,
                                       const std::vector<int>& labels);

struct HoldoutRun {
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
  std::vector<std::string> actual;     // class name per test id
  std::vector<std::string> predicted;  // class name per test id
};

struct ClassificationResult {
  int runs = 0;
  double accuracy = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> class_names;  // the two classes, first-appearance order
  std::vector<HoldoutRun> run_records;
};

/// Repeated random holdout with per-class training samples. `test_per_class`
/// rows per class are held out each run; 0 selects a single pooled test row
/// per run instead. Each run draws from its own PRNG stream, so results do
/// not depend on scheduling.
ClassificationResult repeated_holdout_classify(const FeatureMatrix& matrix,
                                               const std::vector<std::string>& labels,
                                               int train_per_class = 9, int runs = 100,
                                               int k = 1, std::uint64_t seed = 0,
                                               int test_per_class = 1, int jobs = 1);

}  // namespace stylochron
