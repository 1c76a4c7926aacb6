#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "stylochron/report.hpp"

namespace {

using namespace stylochron;

struct Options {
  std::string manifest;
  std::string lexicons;
  std::string out = "stylochron_out";
  std::uint64_t seed = 0;
  int k = 0;  // 0 = subcommand default (3 regression, 1 classification)
  int segments = 20;
  int drift_segments = 10;
  int dft_bins = 32;
  int split_year = 1600;
  std::string focus;
  bool strip_speaker_labels = false;
  std::string start_marker;
  std::string end_marker;
  bool r2_weights = false;
  int jobs = 1;
  int runs = 100;
  int train_per_class = 9;
  int test_per_class = 1;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--manifest", o.manifest, "corpus manifest CSV (id,title,path,year,genre)")
      ->required();
  cmd->add_option("--lexicons", o.lexicons,
                  "directory with pos.tsv, sentiment.tsv, negators.txt, topics/")
      ->required();
  cmd->add_option("--out", o.out, "output directory (default stylochron_out)");
  cmd->add_option("--seed", o.seed, "PRNG seed for randomized analyses");
  cmd->add_option("--k", o.k, "nearest neighbors (default 3 regression, 1 classification)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--segments", o.segments, "segments for word homogeneity (default 20)")
      ->check(CLI::Range(2, 10000));
  cmd->add_option("--drift-segments", o.drift_segments,
                  "segments for drift descriptors (default 10)")
      ->check(CLI::Range(2, 10000));
  cmd->add_option("--dft-bins", o.dft_bins, "bins for tag spectrum descriptors (default 32)")
      ->check(CLI::Range(2, 65536));
  cmd->add_option("--split-year", o.split_year, "era boundary year (default 1600)");
  cmd->add_option("--focus", o.focus,
                  "focus document id for era comparison (default: first manifest entry)");
  cmd->add_flag("--strip-speaker-labels", o.strip_speaker_labels,
                "drop ALL-CAPS speaker label lines ending in '.'");
  cmd->add_option("--start-marker", o.start_marker,
                  "drop everything before the first occurrence of this string");
  cmd->add_option("--end-marker", o.end_marker,
                  "drop everything from the last occurrence of this string on");
  cmd->add_flag("--r2-weights", o.r2_weights, "weight descriptors by r^2 instead of |r|");
  cmd->add_option("--jobs", o.jobs, "worker threads (default 1)")
      ->check(CLI::PositiveNumber);
}

PipelineConfig to_config(const Options& o, int default_k) {
  PipelineConfig cfg;
  cfg.manifest_path = o.manifest;
  cfg.lexicon_dir = o.lexicons;
  cfg.out_dir = o.out;
  cfg.seed = o.seed;
  cfg.k = o.k > 0 ? o.k : default_k;
  cfg.scheme = o.r2_weights ? WeightScheme::r_squared : WeightScheme::abs_r;
  cfg.features.homogeneity_segments = o.segments;
  cfg.features.drift_segments = o.drift_segments;
  cfg.features.dft_bins = o.dft_bins;
  cfg.split_year = o.split_year;
  cfg.focus_id = o.focus;
  cfg.cleaning.speaker_labels =
      o.strip_speaker_labels ? SpeakerLabelPolicy::strip : SpeakerLabelPolicy::keep;
  if (!o.start_marker.empty()) cfg.cleaning.start_marker = o.start_marker;
  if (!o.end_marker.empty()) cfg.cleaning.end_marker = o.end_marker;
  cfg.classify_k = o.k > 0 ? o.k : 1;
  cfg.classify_runs = o.runs;
  cfg.classify_train_per_class = o.train_per_class;
  cfg.classify_test_per_class = o.test_per_class;
  cfg.jobs = o.jobs;
  return cfg;
}

struct Loaded {
  Manifest manifest;
  Lexicons lex;
  DescriptorCatalog catalog;
  FeatureMatrix matrix;
  std::vector<int> years;
  std::vector<Genre> genres;
  std::vector<std::string> warnings;
};

Loaded load_all(const PipelineConfig& cfg) {
  Loaded l;
  l.manifest = load_manifest(cfg.manifest_path, &l.warnings);
  if (l.manifest.entries.empty()) throw InsufficientData("empty corpus");
  l.lex = load_lexicons(cfg.lexicon_dir, &l.warnings);
  std::vector<CleanDocument> docs;
  for (auto& [record, doc] : load_corpus(l.manifest, cfg.cleaning, &l.warnings)) {
    docs.push_back(std::move(doc));
  }
  l.catalog = DescriptorCatalog::build(l.lex, cfg.features);
  l.matrix = build_feature_matrix(docs, l.lex, cfg.features, l.catalog, cfg.jobs, &l.warnings);
  for (const PlayRecord& rec : l.manifest.entries) {
    l.years.push_back(rec.year);
    l.genres.push_back(rec.genre);
  }
  return l;
}

void print_warnings(const Loaded& l) {
  for (const std::string& w : l.warnings) std::cerr << "warning: " << w << '\n';
}

int cmd_extract(const PipelineConfig& cfg) {
  const Loaded l = load_all(cfg);
  std::filesystem::create_directories(cfg.out_dir);
  const auto path = cfg.out_dir / "features.csv";
  write_feature_matrix(l.matrix, path);
  print_warnings(l);
  std::cout << "wrote " << path.string() << " (" << l.matrix.ids.size() << " documents, "
            << l.matrix.columns.size() << " descriptors)\n";
  return 0;
}

int cmd_trends(const PipelineConfig& cfg) {
  const Loaded l = load_all(cfg);
  const std::vector<TrendRow> rows = trend_report(l.matrix, l.years);
  std::filesystem::create_directories(cfg.out_dir);
  const auto path = cfg.out_dir / "trends.csv";
  write_trends(rows, path);
  print_warnings(l);
  std::cout << "wrote " << path.string() << "; strongest trends:\n";
  for (std::size_t i = 0; i < rows.size() && i < 5; ++i) {
    std::cout << "  " << rows[i].descriptor << " r=" << format_csv_double(rows[i].r)
              << " p=" << format_csv_double(rows[i].p) << '\n';
  }
  return 0;
}

int cmd_predict_years(const PipelineConfig& cfg) {
  const Loaded l = load_all(cfg);
  const RegressionResult result =
      loo_predict_years(l.matrix, l.years, cfg.k, cfg.scheme, cfg.jobs);
  std::filesystem::create_directories(cfg.out_dir);
  write_predictions(result, cfg.out_dir / "predictions.csv");
  std::vector<std::pair<double, double>> pairs;
  for (const PredictionRow& row : result.rows) {
    pairs.emplace_back(static_cast<double>(row.actual_year), row.predicted_year);
  }
  scatter_svg(pairs, cfg.out_dir / "scatter.svg");
  print_warnings(l);
  std::cout << "leave-one-out over " << result.rows.size()
            << " documents: r=" << format_csv_double(result.summary.r)
            << " p=" << format_csv_double(result.summary.p_two_tailed) << '\n';
  return 0;
}

int cmd_compare_eras(const PipelineConfig& cfg) {
  const Loaded l = load_all(cfg);
  const std::string focus_id =
      cfg.focus_id.empty() ? l.manifest.entries.front().id : cfg.focus_id;
  const EraComparison cmp = era_compare(l.matrix, l.years, cfg.split_year, focus_id);
  std::filesystem::create_directories(cfg.out_dir);
  const auto path = cfg.out_dir / "era.csv";
  write_era(cmp, path);
  print_warnings(l);
  std::cout << "wrote " << path.string() << " (focus=" << focus_id << ", split="
            << cfg.split_year << ")\n";
  return 0;
}

int cmd_classify(const PipelineConfig& cfg) {
  const Loaded l = load_all(cfg);

  // Comedy-versus-tragedy rows only.
  FeatureMatrix sub;
  sub.columns = l.matrix.columns;
  std::vector<std::string> labels;
  std::vector<Eigen::Index> keep;
  for (std::size_t i = 0; i < l.genres.size(); ++i) {
    if (l.genres[i] == Genre::comedy || l.genres[i] == Genre::tragedy) {
      keep.push_back(static_cast<Eigen::Index>(i));
      labels.push_back(genre_name(l.genres[i]));
      sub.ids.push_back(l.matrix.ids[i]);
    }
  }
  sub.values.resize(static_cast<Eigen::Index>(keep.size()), l.matrix.values.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    sub.values.row(static_cast<Eigen::Index>(i)) = l.matrix.values.row(keep[i]);
  }

  const ClassificationResult result = repeated_holdout_classify(
      sub, labels, cfg.classify_train_per_class, cfg.classify_runs, cfg.classify_k,
      cfg.seed, cfg.classify_test_per_class, cfg.jobs);
  std::filesystem::create_directories(cfg.out_dir);
  const auto path = cfg.out_dir / "classification.json";
  write_classification(result, cfg.classify_k, cfg.classify_train_per_class,
                       cfg.classify_test_per_class, path);
  print_warnings(l);
  std::cout << "accuracy " << format_csv_double(result.accuracy) << " over "
            << result.runs << " runs (" << result.class_names[0] << " vs "
            << result.class_names[1] << "); wrote " << path.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stylochron: stylometric descriptors and date-of-composition models"};
  app.require_subcommand(1);

  Options o;
  CLI::App* extract = app.add_subcommand("extract", "write the descriptor matrix CSV");
  CLI::App* trends =
      app.add_subcommand("trends", "correlate each descriptor with composition year");
  CLI::App* predict = app.add_subcommand(
      "predict-years", "leave-one-out year prediction with a scatter plot");
  CLI::App* eras = app.add_subcommand(
      "compare-eras", "compare a focus document against early and late groups");
  CLI::App* classify =
      app.add_subcommand("classify", "repeated-holdout comedy/tragedy classification");
  CLI::App* report = app.add_subcommand("report", "run every analysis and write run.json");
  for (CLI::App* cmd : {extract, trends, predict, eras, classify, report}) {
    add_common(cmd, o);
  }
  classify->add_option("--runs", o.runs, "holdout repetitions (default 100)")
      ->check(CLI::PositiveNumber);
  classify
      ->add_option("--train-per-class", o.train_per_class,
                   "training documents per class (default 9)")
      ->check(CLI::PositiveNumber);
  classify
      ->add_option("--test-per-class", o.test_per_class,
                   "test documents per class; 0 tests a single pooled document (default 1)")
      ->check(CLI::Range(0, 10000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool is_classify = classify->parsed();
  const PipelineConfig cfg = to_config(o, is_classify ? 1 : 3);
  try {
    if (extract->parsed()) return cmd_extract(cfg);
    if (trends->parsed()) return cmd_trends(cfg);
    if (predict->parsed()) return cmd_predict_years(cfg);
    if (eras->parsed()) return cmd_compare_eras(cfg);
    if (classify->parsed()) return cmd_classify(cfg);
    if (report->parsed()) return stylochron::run_pipeline(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
