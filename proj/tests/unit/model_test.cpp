#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "stylochron/errors.hpp"
#include "stylochron/model.hpp"
#include "stylochron/rng.hpp"

using namespace stylochron;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

FeatureMatrix random_matrix(SplitMix64& rng, int rows, int cols,
                            const std::string& prefix = "doc") {
  FeatureMatrix m;
  m.values.resize(rows, cols);
  for (int i = 0; i < rows; ++i) {
    m.ids.push_back(prefix + std::to_string(i));
    for (int j = 0; j < cols; ++j) m.values(i, j) = rng.uniform() * 4.0 - 2.0;
  }
  for (int j = 0; j < cols; ++j) m.columns.push_back("f" + std::to_string(j));
  return m;
}

bool same_bits(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return a.size() == b.size() && (a.array() == b.array()).all();
}

}  // namespace

TEST_SUITE("fit_normalizer") {
  TEST_CASE("z-scores a simple column") {
    Eigen::MatrixXd train(3, 1);
    train << 1, 2, 3;
    const auto norm = fit_normalizer(train);
    CHECK(norm.mean[0] == doctest::Approx(2.0));
    CHECK(norm.stddev[0] == doctest::Approx(1.0));
    CHECK(norm.apply(vec({1}))[0] == doctest::Approx(-1.0));
    CHECK(norm.apply(vec({2}))[0] == doctest::Approx(0.0));
    CHECK(norm.apply(vec({3}))[0] == doctest::Approx(1.0));
  }

  TEST_CASE("constant columns normalize to zero") {
    Eigen::MatrixXd train(3, 2);
    train << 7, 1, 7, 2, 7, 3;
    const auto norm = fit_normalizer(train);
    CHECK(norm.stddev[0] == 0.0);
    CHECK(norm.apply(vec({100, 2}))[0] == 0.0);
  }

  TEST_CASE("unapply inverts apply") {
    SplitMix64 rng(61);
    Eigen::MatrixXd train(8, 3);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 3; ++j) train(i, j) = rng.uniform() * 9.0;
    const auto norm = fit_normalizer(train);
    const Eigen::VectorXd row = train.row(4);
    const Eigen::VectorXd back = norm.unapply(norm.apply(row));
    CHECK((back - row).cwiseAbs().maxCoeff() < 1e-12);
  }

  TEST_CASE("empty training set is rejected") {
    CHECK_THROWS_AS(fit_normalizer(Eigen::MatrixXd(0, 3)), InsufficientData);
  }

  TEST_CASE("apply_rows matches apply row by row") {
    SplitMix64 rng(62);
    Eigen::MatrixXd train(6, 2);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 2; ++j) train(i, j) = rng.uniform();
    const auto norm = fit_normalizer(train);
    const Eigen::MatrixXd all = norm.apply_rows(train);
    for (int i = 0; i < 6; ++i) {
      const Eigen::VectorXd one = norm.apply(train.row(i));
      CHECK((all.row(i).transpose() - one).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_SUITE("regression_weights") {
  TEST_CASE("perfect predictor gets weight one") {
    Eigen::MatrixXd train(4, 2);
    train << 1590, 5, 1600, 5, 1610, 5, 1620, 5;
    const auto w = regression_weights(train, vec({1590, 1600, 1610, 1620}));
    CHECK(w[0] == doctest::Approx(1.0));
    CHECK(w[1] == 0.0);  // constant column is degenerate
  }

  TEST_CASE("sign of the correlation does not matter") {
    Eigen::MatrixXd train(4, 1);
    train << 4, 3, 2, 1;
    const auto w = regression_weights(train, vec({1, 2, 3, 4}));
    CHECK(w[0] == doctest::Approx(1.0));
  }

  TEST_CASE("r-squared scheme squares the correlation") {
    SplitMix64 rng(63);
    Eigen::MatrixXd train(30, 2);
    Eigen::VectorXd years(30);
    for (int i = 0; i < 30; ++i) {
      years[i] = 1580 + i;
      train(i, 0) = years[i] + rng.uniform() * 20.0;
      train(i, 1) = rng.uniform();
    }
    const auto absr = regression_weights(train, years, WeightScheme::abs_r);
    const auto rsq = regression_weights(train, years, WeightScheme::r_squared);
    CHECK(rsq[0] == doctest::Approx(absr[0] * absr[0]).epsilon(1e-12));
    CHECK(rsq[1] == doctest::Approx(absr[1] * absr[1]).epsilon(1e-12));
  }

  TEST_CASE("noise columns get small weights") {
    SplitMix64 rng(64);
    Eigen::MatrixXd train(200, 1);
    Eigen::VectorXd years(200);
    for (int i = 0; i < 200; ++i) {
      years[i] = 1500 + i;
      train(i, 0) = rng.uniform();
    }
    const auto w = regression_weights(train, years);
    CHECK(w[0] < 0.25);
  }

  TEST_CASE("needs at least three rows") {
    Eigen::MatrixXd train(2, 1);
    train << 1, 2;
    CHECK_THROWS_AS(regression_weights(train, vec({1, 2})), InsufficientData);
  }
}

TEST_SUITE("wnn_predict") {
  TEST_CASE("inverse-distance vote between two neighbors") {
    Eigen::MatrixXd train(2, 1);
    train << 0, 1;
    const double pred =
        wnn_predict(train, vec({1590, 1610}), vec({1}), vec({0.25}), 2);
    CHECK(pred == doctest::Approx(1595.0).epsilon(1e-6));
  }

  TEST_CASE("exact match returns its year exactly") {
    Eigen::MatrixXd train(3, 2);
    train << 1, 2, 3, 4, 5, 6;
    const double pred =
        wnn_predict(train, vec({1591, 1603, 1617}), vec({1, 1}), vec({3, 4}), 1);
    CHECK(pred == 1603.0);
  }

  TEST_CASE("all-zero weights average the first k years") {
    Eigen::MatrixXd train(3, 1);
    train << 10, 20, 30;
    const double pred =
        wnn_predict(train, vec({1590, 1610, 1650}), vec({0}), vec({5}), 2);
    CHECK(pred == doctest::Approx(1600.0));
  }

  TEST_CASE("k out of range is rejected") {
    Eigen::MatrixXd train(3, 1);
    train << 1, 2, 3;
    CHECK_THROWS_AS(wnn_predict(train, vec({1, 2, 3}), vec({1}), vec({1}), 0),
                    ValueError);
    CHECK_THROWS_AS(wnn_predict(train, vec({1, 2, 3}), vec({1}), vec({1}), 4),
                    ValueError);
  }

  TEST_CASE("nearer neighbors pull harder") {
    Eigen::MatrixXd train(2, 1);
    train << 0, 1;
    const double near_lo =
        wnn_predict(train, vec({1590, 1610}), vec({1}), vec({0.1}), 2);
    const double near_hi =
        wnn_predict(train, vec({1590, 1610}), vec({1}), vec({0.9}), 2);
    CHECK(near_lo < near_hi);
    CHECK(near_lo > 1590.0);
    CHECK(near_hi < 1610.0);
  }
}

TEST_SUITE("fit_fold") {
  TEST_CASE("held-out row cannot influence the fold model") {
    SplitMix64 rng(65);
    auto matrix = random_matrix(rng, 6, 3);
    const std::vector<int> years = {1590, 1595, 1600, 1605, 1610, 1615};
    const auto before = fit_fold(matrix, years, 2);
    matrix.values.row(2).setConstant(1e6);
    const auto after = fit_fold(matrix, years, 2);
    CHECK(same_bits(before.weights, after.weights));
    CHECK(same_bits(before.normalizer.mean, after.normalizer.mean));
    CHECK(same_bits(before.normalizer.stddev, after.normalizer.stddev));
  }

  TEST_CASE("fold index out of range") {
    SplitMix64 rng(66);
    const auto matrix = random_matrix(rng, 4, 2);
    CHECK_THROWS_AS(fit_fold(matrix, {1, 2, 3, 4}, 4), ValueError);
  }
}

TEST_SUITE("loo_predict_years") {
  TEST_CASE("duplicated pairs are recovered exactly") {
    SplitMix64 rng(67);
    FeatureMatrix m;
    const int pairs = 4;
    m.values.resize(2 * pairs, 3);
    std::vector<int> years;
    for (int p = 0; p < pairs; ++p) {
      Eigen::RowVector3d row;
      for (int j = 0; j < 3; ++j) row[j] = rng.uniform() * 10.0;
      m.values.row(2 * p) = row;
      m.values.row(2 * p + 1) = row;
      m.ids.push_back("a" + std::to_string(p));
      m.ids.push_back("b" + std::to_string(p));
      years.push_back(1590 + 10 * p);
      years.push_back(1590 + 10 * p);
    }
    m.columns = {"f0", "f1", "f2"};
    const auto res = loo_predict_years(m, years, 1);
    REQUIRE(res.rows.size() == m.ids.size());
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
      CHECK(res.rows[i].predicted_year == static_cast<double>(years[i]));
    }
    CHECK(res.summary.r == 1.0);
    CHECK(res.summary.p_two_tailed == 0.0);
  }

  TEST_CASE("a perfect descriptor dominates noise") {
    SplitMix64 rng(68);
    FeatureMatrix m;
    const int n = 40;
    m.values.resize(n, 3);
    std::vector<int> years;
    for (int i = 0; i < n; ++i) {
      const int year = 1580 + i;
      years.push_back(year);
      m.ids.push_back("doc" + std::to_string(i));
      m.values(i, 0) = static_cast<double>(year);
      m.values(i, 1) = rng.uniform();
      m.values(i, 2) = rng.uniform();
    }
    m.columns = {"year_exact", "noise_a", "noise_b"};
    const auto res = loo_predict_years(m, years, 1);
    CHECK(res.summary.r > 0.95);
    CHECK(res.summary.p_two_tailed < 1e-6);
  }

  TEST_CASE("needs at least four documents") {
    SplitMix64 rng(69);
    const auto m = random_matrix(rng, 3, 2);
    CHECK_THROWS_AS(loo_predict_years(m, {1590, 1600, 1610}, 1), InsufficientData);
  }

  TEST_CASE("parallel execution matches serial bit for bit") {
    SplitMix64 rng(70);
    auto m = random_matrix(rng, 16, 5);
    m.values.col(0) = Eigen::VectorXd::LinSpaced(16, 1580, 1610);
    std::vector<int> years;
    for (int i = 0; i < 16; ++i) years.push_back(1580 + 2 * i);
    const auto serial = loo_predict_years(m, years, 3, WeightScheme::abs_r, 1);
    const auto parallel = loo_predict_years(m, years, 3, WeightScheme::abs_r, 4);
    REQUIRE(serial.rows.size() == parallel.rows.size());
    for (std::size_t i = 0; i < serial.rows.size(); ++i) {
      CHECK(serial.rows[i].predicted_year == parallel.rows[i].predicted_year);
    }
  }

  TEST_CASE("scaling a raw column changes nothing") {
    SplitMix64 rng(71);
    auto m = random_matrix(rng, 12, 4);
    std::vector<int> years;
    for (int i = 0; i < 12; ++i) years.push_back(1585 + 3 * i);
    const auto base = loo_predict_years(m, years, 3);
    m.values.col(2) *= 1000.0;
    const auto scaled = loo_predict_years(m, years, 3);
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
      CHECK(std::fabs(base.rows[i].predicted_year - scaled.rows[i].predicted_year) <=
            1e-9);
    }
  }

  TEST_CASE("a constant extra column changes nothing at all") {
    SplitMix64 rng(72);
    const auto m = random_matrix(rng, 10, 3);
    std::vector<int> years;
    for (int i = 0; i < 10; ++i) years.push_back(1590 + 2 * i);
    const auto base = loo_predict_years(m, years, 2);
    FeatureMatrix wide = m;
    wide.columns.push_back("constant");
    wide.values.conservativeResize(Eigen::NoChange, 4);
    wide.values.col(3).setConstant(42.0);
    const auto extended = loo_predict_years(wide, years, 2);
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
      CHECK(base.rows[i].predicted_year == extended.rows[i].predicted_year);
    }
  }
}

TEST_SUITE("classification_weights") {
  TEST_CASE("separated column outweighs an overlapping one") {
    Eigen::MatrixXd train(4, 2);
    // col 0 separates the classes, col 1 is identical across them.
    train << 0.0, 1.0, 0.1, 2.0, 10.0, 1.0, 10.1, 2.0;
    const auto w = classification_weights(train, {0, 0, 1, 1});
    CHECK(w[0] > 10.0);
    CHECK(w[1] == 0.0);  // equal means, t = 0
  }

  TEST_CASE("constant column gets weight zero") {
    Eigen::MatrixXd train(4, 1);
    train << 5, 5, 5, 5;
    const auto w = classification_weights(train, {0, 0, 1, 1});
    CHECK(w[0] == 0.0);
  }

  TEST_CASE("each class needs two rows") {
    Eigen::MatrixXd train(3, 1);
    train << 1, 2, 3;
    CHECK_THROWS_AS(classification_weights(train, {0, 0, 1}), InsufficientData);
  }
}

TEST_SUITE("repeated_holdout_classify") {
  TEST_CASE("disjoint classes classify perfectly") {
    SplitMix64 rng(73);
    FeatureMatrix m;
    const int per_class = 12;
    m.values.resize(2 * per_class, 3);
    std::vector<std::string> labels;
    for (int i = 0; i < 2 * per_class; ++i) {
      const bool second = i >= per_class;
      m.ids.push_back((second ? "trag" : "com") + std::to_string(i));
      labels.push_back(second ? "tragedy" : "comedy");
      for (int j = 0; j < 3; ++j) {
        m.values(i, j) = rng.uniform() + (second ? 10.0 : 0.0);
      }
    }
    m.columns = {"f0", "f1", "f2"};
    const auto res = repeated_holdout_classify(m, labels, 9, 50, 1, 7);
    CHECK(res.accuracy == 1.0);
    CHECK(res.runs == 50);
    REQUIRE(res.class_names.size() == 2);
    CHECK(res.class_names[0] == "comedy");
    CHECK(res.class_names[1] == "tragedy");
    REQUIRE(res.run_records.size() == 50);
    CHECK(res.run_records[0].train_ids.size() == 18);
    CHECK(res.run_records[0].test_ids.size() == 2);
  }

  TEST_CASE("same seed reproduces every draw") {
    SplitMix64 rng(74);
    auto m = random_matrix(rng, 24, 4);
    std::vector<std::string> labels;
    for (int i = 0; i < 24; ++i) labels.push_back(i % 2 == 0 ? "a" : "b");
    const auto r1 = repeated_holdout_classify(m, labels, 9, 20, 1, 99);
    const auto r2 = repeated_holdout_classify(m, labels, 9, 20, 1, 99);
    CHECK(r1.accuracy == r2.accuracy);
    REQUIRE(r1.run_records.size() == r2.run_records.size());
    for (std::size_t i = 0; i < r1.run_records.size(); ++i) {
      CHECK(r1.run_records[i].train_ids == r2.run_records[i].train_ids);
      CHECK(r1.run_records[i].test_ids == r2.run_records[i].test_ids);
      CHECK(r1.run_records[i].predicted == r2.run_records[i].predicted);
    }
  }

  TEST_CASE("different seeds draw different folds") {
    SplitMix64 rng(75);
    auto m = random_matrix(rng, 24, 4);
    std::vector<std::string> labels;
    for (int i = 0; i < 24; ++i) labels.push_back(i % 2 == 0 ? "a" : "b");
    const auto r1 = repeated_holdout_classify(m, labels, 9, 10, 1, 1);
    const auto r2 = repeated_holdout_classify(m, labels, 9, 10, 1, 2);
    bool any_difference = false;
    for (std::size_t i = 0; i < r1.run_records.size(); ++i) {
      if (r1.run_records[i].train_ids != r2.run_records[i].train_ids) {
        any_difference = true;
        break;
      }
    }
    CHECK(any_difference);
  }

  TEST_CASE("pooled single-test mode holds out one row per run") {
    SplitMix64 rng(76);
    auto m = random_matrix(rng, 22, 3);
    std::vector<std::string> labels;
    for (int i = 0; i < 22; ++i) labels.push_back(i < 11 ? "a" : "b");
    const auto res = repeated_holdout_classify(m, labels, 9, 30, 1, 5, 0);
    for (const auto& run : res.run_records) {
      CHECK(run.test_ids.size() == 1);
      CHECK(run.train_ids.size() == 18);
    }
  }

  TEST_CASE("parallel runs match serial runs") {
    SplitMix64 rng(77);
    auto m = random_matrix(rng, 24, 4);
    std::vector<std::string> labels;
    for (int i = 0; i < 24; ++i) labels.push_back(i % 2 == 0 ? "a" : "b");
    const auto serial = repeated_holdout_classify(m, labels, 9, 20, 1, 3, 1, 1);
    const auto parallel = repeated_holdout_classify(m, labels, 9, 20, 1, 3, 1, 4);
    CHECK(serial.accuracy == parallel.accuracy);
    for (std::size_t i = 0; i < serial.run_records.size(); ++i) {
      CHECK(serial.run_records[i].predicted == parallel.run_records[i].predicted);
    }
  }

  TEST_CASE("undersized classes are rejected") {
    SplitMix64 rng(78);
    auto m = random_matrix(rng, 12, 3);
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(i < 9 ? "a" : "b");
    CHECK_THROWS_AS(repeated_holdout_classify(m, labels, 9, 10, 1, 0), InsufficientData);
  }

  TEST_CASE("more than two classes are rejected") {
    SplitMix64 rng(79);
    auto m = random_matrix(rng, 12, 3);
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back(std::string(1, 'a' + i % 3));
    CHECK_THROWS_AS(repeated_holdout_classify(m, labels, 2, 10, 1, 0), ValueError);
  }

  TEST_CASE("scaling a raw column preserves every prediction") {
    SplitMix64 rng(80);
    auto m = random_matrix(rng, 24, 4);
    std::vector<std::string> labels;
    for (int i = 0; i < 24; ++i) labels.push_back(i % 2 == 0 ? "a" : "b");
    const auto base = repeated_holdout_classify(m, labels, 9, 15, 1, 11);
    m.values.col(1) *= 1000.0;
    const auto scaled = repeated_holdout_classify(m, labels, 9, 15, 1, 11);
    for (std::size_t i = 0; i < base.run_records.size(); ++i) {
      CHECK(base.run_records[i].predicted == scaled.run_records[i].predicted);
    }
  }
}
