#include "stylochron/model.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "stylochron/rng.hpp"

namespace stylochron {

namespace {

constexpr double kVoteEpsilon = 1e-9;

// Runs body(i) for i in [0, n). Each index is processed exactly once; with
// jobs > 1 the order is unspecified, so body must only touch its own slot.
template <typename Body>
void parallel_for(std::size_t n, int jobs, Body body) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void check_matrix(const FeatureMatrix& m) {
  if (static_cast<std::size_t>(m.values.rows()) != m.ids.size() ||
      static_cast<std::size_t>(m.values.cols()) != m.columns.size()) {
    throw ShapeError("feature matrix shape does not match its id/column lists");
  }
}

// Weighted squared distance in normalized space.
double weighted_distance(Eigen::Ref<const Eigen::VectorXd> a,
                         Eigen::Ref<const Eigen::VectorXd> b,
                         Eigen::Ref<const Eigen::VectorXd> w) {
  double s = 0.0;
  for (Eigen::Index f = 0; f < a.size(); ++f) {
    const double d = a[f] - b[f];
    s += w[f] * d * d;
  }
  return std::sqrt(s);
}

// Indices of the k nearest rows, distance ties broken by row index.
std::vector<Eigen::Index> k_nearest(const Eigen::MatrixXd& train,
                                    Eigen::Ref<const Eigen::VectorXd> weights,
                                    Eigen::Ref<const Eigen::VectorXd> query, int k,
                                    std::vector<double>* distances_out) {
  const Eigen::Index n = train.rows();
  std::vector<double> dist(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    dist[static_cast<std::size_t>(i)] = weighted_distance(train.row(i), query, weights);
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    const double da = dist[static_cast<std::size_t>(a)];
    const double db = dist[static_cast<std::size_t>(b)];
    return da < db || (da == db && a < b);
  });
  order.resize(static_cast<std::size_t>(k));
  if (distances_out) {
    distances_out->clear();
    for (Eigen::Index i : order) distances_out->push_back(dist[static_cast<std::size_t>(i)]);
  }
  return order;
}

}  // namespace

Eigen::VectorXd Normalizer::apply(Eigen::Ref<const Eigen::VectorXd> row) const {
  if (row.size() != mean.size()) throw ShapeError("normalizer/vector size mismatch");
  Eigen::VectorXd out(row.size());
  for (Eigen::Index f = 0; f < row.size(); ++f) {
    out[f] = stddev[f] > 0.0 ? (row[f] - mean[f]) / stddev[f] : 0.0;
  }
  return out;
}

Eigen::MatrixXd Normalizer::apply_rows(const Eigen::MatrixXd& rows) const {
  if (rows.cols() != mean.size()) throw ShapeError("normalizer/matrix size mismatch");
  Eigen::MatrixXd out(rows.rows(), rows.cols());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    out.row(i) = apply(rows.row(i).transpose()).transpose();
  }
  return out;
}

Eigen::VectorXd Normalizer::unapply(Eigen::Ref<const Eigen::VectorXd> row) const {
  if (row.size() != mean.size()) throw ShapeError("normalizer/vector size mismatch");
  Eigen::VectorXd out(row.size());
  for (Eigen::Index f = 0; f < row.size(); ++f) {
    out[f] = stddev[f] > 0.0 ? row[f] * stddev[f] + mean[f] : mean[f];
  }
  return out;
}

Normalizer fit_normalizer(const Eigen::MatrixXd& train) {
  if (train.rows() == 0) throw InsufficientData("cannot fit a normalizer on an empty set");
  Normalizer norm;
  norm.mean = train.colwise().mean();
  norm.stddev = Eigen::VectorXd::Zero(train.cols());
  if (train.rows() > 1) {
    for (Eigen::Index f = 0; f < train.cols(); ++f) {
      const double ss = (train.col(f).array() - norm.mean[f]).square().sum();
      norm.stddev[f] = std::sqrt(ss / static_cast<double>(train.rows() - 1));
    }
  }
  return norm;
}

Eigen::VectorXd regression_weights(const Eigen::MatrixXd& train,
                                   Eigen::Ref<const Eigen::VectorXd> years,
                                   WeightScheme scheme) {
  if (train.rows() < 3) throw InsufficientData("regression weights need at least 3 rows");
  if (train.rows() != years.size()) throw ShapeError("rows/years size mismatch");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(train.cols());
  for (Eigen::Index f = 0; f < train.cols(); ++f) {
    double r = 0.0;
    try {
      r = pearson(train.col(f), years);
    } catch (const DegenerateInput&) {
      r = 0.0;
    }
    w[f] = scheme == WeightScheme::abs_r ? std::fabs(r) : r * r;
  }
  return w;
}

double wnn_predict(const Eigen::MatrixXd& train, Eigen::Ref<const Eigen::VectorXd> years,
                   Eigen::Ref<const Eigen::VectorXd> weights,
                   Eigen::Ref<const Eigen::VectorXd> query, int k) {
  const Eigen::Index n = train.rows();
  if (k < 1 || k > n) {
    throw ValueError("k must be between 1 and the number of training rows");
  }
  if (train.rows() != years.size() || train.cols() != weights.size() ||
      train.cols() != query.size()) {
    throw ShapeError("train/years/weights/query size mismatch");
  }
  std::vector<double> dist;
  const std::vector<Eigen::Index> nearest = k_nearest(train, weights, query, k, &dist);

  // Zero-distance neighbors dominate: with one exact match this returns its
  // year; with all distances zero it is the mean of the first k by index.
  double exact_sum = 0.0;
  std::size_t exact_n = 0;
  for (std::size_t i = 0; i < nearest.size(); ++i) {
    if (dist[i] == 0.0) {
      exact_sum += years[nearest[i]];
      ++exact_n;
    }
  }
  if (exact_n > 0) return exact_sum / static_cast<double>(exact_n);

  double vote_sum = 0.0, weight_sum = 0.0;
  for (std::size_t i = 0; i < nearest.size(); ++i) {
    const double v = 1.0 / (dist[i] + kVoteEpsilon);
    vote_sum += v * years[nearest[i]];
    weight_sum += v;
  }
  return vote_sum / weight_sum;
}

FoldModel fit_fold(const FeatureMatrix& matrix, const std::vector<int>& years,
                   std::size_t exclude, WeightScheme scheme) {
  check_matrix(matrix);
  const auto n = static_cast<std::size_t>(matrix.values.rows());
  if (years.size() != n) throw ShapeError("years/matrix size mismatch");
  if (exclude >= n) throw ValueError("fold index out of range");

  Eigen::MatrixXd train(static_cast<Eigen::Index>(n - 1), matrix.values.cols());
  Eigen::VectorXd train_years(static_cast<Eigen::Index>(n - 1));
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == exclude) continue;
    train.row(row) = matrix.values.row(static_cast<Eigen::Index>(i));
    train_years[row] = static_cast<double>(years[i]);
    ++row;
  }
  FoldModel fm;
  fm.normalizer = fit_normalizer(train);
  fm.weights = regression_weights(train, train_years, scheme);
  return fm;
}

RegressionResult loo_predict_years(const FeatureMatrix& matrix,
                                   const std::vector<int>& years, int k,
                                   WeightScheme scheme, int jobs) {
  check_matrix(matrix);
  const auto n = static_cast<std::size_t>(matrix.values.rows());
  if (n < 4) throw InsufficientData("leave-one-out needs at least 4 documents");
  if (years.size() != n) throw ShapeError("years/matrix size mismatch");

  RegressionResult result;
  result.rows.resize(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    const FoldModel fm = fit_fold(matrix, years, i, scheme);

    Eigen::MatrixXd train(static_cast<Eigen::Index>(n - 1), matrix.values.cols());
    Eigen::VectorXd train_years(static_cast<Eigen::Index>(n - 1));
    Eigen::Index row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      train.row(row) = fm.normalizer.apply(matrix.values.row(static_cast<Eigen::Index>(j))
                                               .transpose())
                           .transpose();
      train_years[row] = static_cast<double>(years[j]);
      ++row;
    }
    const Eigen::VectorXd query =
        fm.normalizer.apply(matrix.values.row(static_cast<Eigen::Index>(i)).transpose());
    const double predicted = wnn_predict(train, train_years, fm.weights, query, k);
    result.rows[i] = PredictionRow{matrix.ids[i], years[i], predicted};
  });

  Eigen::VectorXd actual(static_cast<Eigen::Index>(n)), predicted(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    actual[static_cast<Eigen::Index>(i)] = static_cast<double>(result.rows[i].actual_year);
    predicted[static_cast<Eigen::Index>(i)] = result.rows[i].predicted_year;
  }
  result.summary = correlate(actual, predicted);
  return result;
}

Eigen::VectorXd classification_weights(const Eigen::MatrixXd& train,
                                       const std::vector<int>& labels) {
  if (static_cast<std::size_t>(train.rows()) != labels.size()) {
    throw ShapeError("rows/labels size mismatch");
  }
  std::size_t n0 = 0, n1 = 0;
  for (int l : labels) (l == 0 ? n0 : n1) += 1;
  if (n0 < 2 || n1 < 2) {
    throw InsufficientData("each class needs at least 2 training rows");
  }
  Eigen::VectorXd w = Eigen::VectorXd::Zero(train.cols());
  Eigen::VectorXd a(static_cast<Eigen::Index>(n0)), b(static_cast<Eigen::Index>(n1));
  for (Eigen::Index f = 0; f < train.cols(); ++f) {
    Eigen::Index ia = 0, ib = 0;
    for (Eigen::Index i = 0; i < train.rows(); ++i) {
      if (labels[static_cast<std::size_t>(i)] == 0) {
        a[ia++] = train(i, f);
      } else {
        b[ib++] = train(i, f);
      }
    }
    try {
      w[f] = std::fabs(welch_ttest(a, b).t);
    } catch (const DegenerateInput&) {
      w[f] = 0.0;
    }
  }
  return w;
}

ClassificationResult repeated_holdout_classify(const FeatureMatrix& matrix,
                                               const std::vector<std::string>& labels,
                                               int train_per_class, int runs, int k,
                                               std::uint64_t seed, int test_per_class,
                                               int jobs) {
  check_matrix(matrix);
  const auto n = static_cast<std::size_t>(matrix.values.rows());
  if (labels.size() != n) throw ShapeError("labels/matrix size mismatch");
  if (train_per_class < 1) throw ValueError("train_per_class must be at least 1");
  if (runs < 1) throw ValueError("runs must be at least 1");
  if (test_per_class < 0) throw ValueError("test_per_class must be 0 or more");

  // The two classes, in first-appearance order.
  std::vector<std::string> class_names;
  std::vector<std::vector<std::size_t>> members(2);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::find(class_names.begin(), class_names.end(), labels[i]);
    std::size_t c;
    if (it == class_names.end()) {
      if (class_names.size() == 2) {
        throw ValueError("classification needs exactly 2 classes, found more");
      }
      c = class_names.size();
      class_names.push_back(labels[i]);
    } else {
      c = static_cast<std::size_t>(it - class_names.begin());
    }
    members[c].push_back(i);
  }
  if (class_names.size() != 2) {
    throw ValueError("classification needs exactly 2 classes");
  }
  const auto need = static_cast<std::size_t>(train_per_class) +
                    static_cast<std::size_t>(test_per_class == 0 ? 1 : test_per_class);
  for (std::size_t c = 0; c < 2; ++c) {
    if (members[c].size() < need) {
      throw InsufficientData("class '" + class_names[c] + "' has " +
                             std::to_string(members[c].size()) +
                             " members, needs at least " + std::to_string(need));
    }
  }
  if (k < 1 || k > 2 * train_per_class) {
    throw ValueError("k must be between 1 and the training set size");
  }

  ClassificationResult result;
  result.runs = runs;
  result.seed = seed;
  result.class_names = class_names;
  result.run_records.resize(static_cast<std::size_t>(runs));
  std::vector<std::size_t> correct_per_run(static_cast<std::size_t>(runs), 0);
  std::vector<std::size_t> total_per_run(static_cast<std::size_t>(runs), 0);

  parallel_for(static_cast<std::size_t>(runs), jobs, [&](std::size_t run) {
    SplitMix64 rng(stream_seed(seed, run));
    // Partial Fisher-Yates: the first `count` slots become the sample.
    auto draw = [&rng](std::vector<std::size_t>& pool, std::size_t start,
                       std::size_t count) {
      for (std::size_t i = start; i < start + count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
      }
    };

    std::vector<std::vector<std::size_t>> pools = members;
    const auto tpc = static_cast<std::size_t>(train_per_class);
    draw(pools[0], 0, tpc);
    draw(pools[1], 0, tpc);

    std::vector<std::size_t> test_rows;
    if (test_per_class > 0) {
      const auto q = static_cast<std::size_t>(test_per_class);
      draw(pools[0], tpc, q);
      draw(pools[1], tpc, q);
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t i = tpc; i < tpc + q; ++i) test_rows.push_back(pools[c][i]);
      }
    } else {
      // One test row per run, drawn from the pooled remainders.
      std::vector<std::size_t> remainder;
      for (std::size_t c = 0; c < 2; ++c) {
        remainder.insert(remainder.end(), pools[c].begin() + static_cast<std::ptrdiff_t>(tpc),
                         pools[c].end());
      }
      test_rows.push_back(remainder[rng.below(remainder.size())]);
    }

    Eigen::MatrixXd train(static_cast<Eigen::Index>(2 * tpc), matrix.values.cols());
    std::vector<int> train_labels(2 * tpc);
    HoldoutRun& record = result.run_records[run];
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t i = 0; i < tpc; ++i) {
        const std::size_t row = pools[c][i];
        train.row(static_cast<Eigen::Index>(c * tpc + i)) =
            matrix.values.row(static_cast<Eigen::Index>(row));
        train_labels[c * tpc + i] = static_cast<int>(c);
        record.train_ids.push_back(matrix.ids[row]);
      }
    }

    const Normalizer norm = fit_normalizer(train);
    const Eigen::VectorXd weights = classification_weights(train, train_labels);
    const Eigen::MatrixXd train_norm = norm.apply_rows(train);

    for (const std::size_t row : test_rows) {
      const Eigen::VectorXd query =
          norm.apply(matrix.values.row(static_cast<Eigen::Index>(row)).transpose());
      std::vector<double> dist;
      const std::vector<Eigen::Index> nearest =
          k_nearest(train_norm, weights, query, k, &dist);
      // Majority vote; a tie falls back to the single nearest neighbor.
      int votes[2] = {0, 0};
      for (const Eigen::Index t : nearest) {
        ++votes[train_labels[static_cast<std::size_t>(t)]];
      }
      int predicted;
      if (votes[0] == votes[1]) {
        predicted = train_labels[static_cast<std::size_t>(nearest.front())];
      } else {
        predicted = votes[1] > votes[0] ? 1 : 0;
      }
      record.test_ids.push_back(matrix.ids[row]);
      record.actual.push_back(labels[row]);
      record.predicted.push_back(class_names[static_cast<std::size_t>(predicted)]);
      total_per_run[run] += 1;
      if (class_names[static_cast<std::size_t>(predicted)] == labels[row]) {
        correct_per_run[run] += 1;
      }
    }
  });

  std::size_t correct = 0, total = 0;
  for (std::size_t run = 0; run < static_cast<std::size_t>(runs); ++run) {
    correct += correct_per_run[run];
    total += total_per_run[run];
  }
  result.accuracy = total == 0 ? 0.0 : static_cast<double>(correct) / static_cast<double>(total);
  return result;
}

}  // namespace stylochron
