#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "stylochron/corpus.hpp"
#include "stylochron/features.hpp"
#include "stylochron/model.hpp"
#include "stylochron/stats.hpp"

namespace stylochron {

/// Extracts every document into one matrix. Rows follow document order
/// regardless of `jobs`; warnings are likewise reported in document order.
FeatureMatrix build_feature_matrix(const std::vector<CleanDocument>& docs,
                                   const Lexicons& lex, const FeatureConfig& cfg,
                                   const DescriptorCatalog& catalog, int jobs = 1,
                                   std::vector<std::string>* warnings = nullptr);

struct TrendRow {
  std::string descriptor;
  double r = 0.0;
  double p = 1.0;
  int n = 0;
  bool degenerate = false;  // correlation undefined (constant descriptor)
};

/// One row per descriptor, sorted by |r| descending; ties keep catalog order.
std::vector<TrendRow> trend_report(const FeatureMatrix& matrix,
                                   const std::vector<int>& years);

struct EraRow {
  std::string descriptor;
  double focus_value = 0.0;
  GroupSummary before;
  GroupSummary after;
  double sigma_before = 0.0;
  double sigma_after = 0.0;
  bool degenerate_before = false;  // era SE is 0, sigma undefined
  bool degenerate_after = false;
};

struct EraComparison {
  int split_year = 1600;
  std::string focus_id;
  std::vector<EraRow> rows;  // catalog order
};

/// Compares the focus document against the documents written before and from
/// the split year on. The focus document belongs to neither group.
EraComparison era_compare(const FeatureMatrix& matrix, const std::vector<int>& years,
                          int split_year, const std::string& focus_id);

struct GenreRow {
  std::string descriptor;
  GroupSummary class_a;
  GroupSummary class_b;
  TTestResult ttest;
  bool degenerate = false;  // both classes constant, test undefined
};

struct GenreComparison {
  std::string class_a;  // "comedy"
  std::string class_b;  // "tragedy"
  std::vector<GenreRow> rows;  // catalog order
};

/// Comedy-versus-tragedy descriptor comparison. Rows whose genre is neither
/// class are left out.
GenreComparison genre_compare(const FeatureMatrix& matrix,
                              const std::vector<Genre>& genres);

/// Writes a self-contained scatter plot of (actual, predicted) year pairs
/// with an identity reference line. Byte-deterministic for identical input.
void scatter_svg(const std::vector<std::pair<double, double>>& pairs,
                 const std::filesystem::path& out);

// Artifact writers. All CSV output is UTF-8 with LF endings and `.` decimals;
// doubles are printed with 17 significant digits.
void write_feature_matrix(const FeatureMatrix& matrix, const std::filesystem::path& out);
void write_trends(const std::vector<TrendRow>& rows, const std::filesystem::path& out);
void write_predictions(const RegressionResult& result, const std::filesystem::path& out);
void write_era(const EraComparison& cmp, const std::filesystem::path& out);
void write_genre(const GenreComparison& cmp, const std::filesystem::path& out);
void write_classification(const ClassificationResult& result, int k, int train_per_class,
                          int test_per_class, const std::filesystem::path& out);

std::string format_csv_double(double v);
std::string csv_escape(const std::string& field);

struct PipelineConfig {
  std::filesystem::path manifest_path;
  std::filesystem::path lexicon_dir;
  std::filesystem::path out_dir = "stylochron_out";
  std::uint64_t seed = 0;
  int k = 3;                       // regression neighbors
  WeightScheme scheme = WeightScheme::abs_r;
  FeatureConfig features;
  int split_year = 1600;
  std::string focus_id;            // empty selects the first manifest entry
  CleaningRules cleaning;
  int classify_k = 1;
  int classify_runs = 100;
  int classify_train_per_class = 9;
  int classify_test_per_class = 1;
  int jobs = 1;
};

/// Full extract/trends/predict/era/genre run writing features.csv, trends.csv,
/// predictions.csv, era.csv, genre.csv, scatter.svg and run.json into the
/// output directory. Returns 0 on success, 2 on any data or processing error
/// (diagnostic goes to `err`). Era and genre tables degrade to a header-only
/// CSV plus a warning when the corpus cannot support them.
int run_pipeline(const PipelineConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace stylochron
