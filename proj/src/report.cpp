#include "stylochron/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace stylochron {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_output(const std::filesystem::path& out) {
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError("cannot open '" + out.string() + "' for writing");
  return f;
}

void finish_output(std::ofstream& f, const std::filesystem::path& out) {
  f.flush();
  if (!f) throw IoError("failed writing '" + out.string() + "'");
}

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string format_csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += '"';
  return out;
}

FeatureMatrix build_feature_matrix(const std::vector<CleanDocument>& docs,
                                   const Lexicons& lex, const FeatureConfig& cfg,
                                   const DescriptorCatalog& catalog, int jobs,
                                   std::vector<std::string>* warnings) {
  FeatureMatrix m;
  m.columns = catalog.names();
  m.values.resize(static_cast<Eigen::Index>(docs.size()),
                  static_cast<Eigen::Index>(catalog.size()));
  m.ids.resize(docs.size());

  std::vector<std::vector<std::string>> per_doc_warnings(docs.size());

  const auto extract_one = [&](std::size_t i) {
    const FeatureVector fv =
        extract_all(docs[i], lex, cfg, catalog, &per_doc_warnings[i]);
    m.ids[i] = fv.id;
    m.values.row(static_cast<Eigen::Index>(i)) = fv.values.transpose();
  };

  if (jobs <= 1 || docs.size() <= 1) {
    for (std::size_t i = 0; i < docs.size(); ++i) extract_one(i);
  } else {
    const auto nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), docs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= docs.size()) return;
          try {
            extract_one(i);
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

  if (warnings) {
    for (const auto& batch : per_doc_warnings) {
      warnings->insert(warnings->end(), batch.begin(), batch.end());
    }
  }
  return m;
}

std::vector<TrendRow> trend_report(const FeatureMatrix& matrix,
                                   const std::vector<int>& years) {
  const auto n = static_cast<std::size_t>(matrix.values.rows());
  if (n < 4) throw InsufficientData("trend report needs at least 4 documents");
  if (years.size() != n) throw ShapeError("years/matrix size mismatch");

  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) y[static_cast<Eigen::Index>(i)] = years[i];

  std::vector<TrendRow> rows;
  rows.reserve(matrix.columns.size());
  for (std::size_t f = 0; f < matrix.columns.size(); ++f) {
    TrendRow row;
    row.descriptor = matrix.columns[f];
    row.n = static_cast<int>(n);
    try {
      const CorrelationResult c = correlate(matrix.values.col(static_cast<Eigen::Index>(f)), y);
      row.r = c.r;
      row.p = c.p_two_tailed;
    } catch (const DegenerateInput&) {
      row.degenerate = true;
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TrendRow& a, const TrendRow& b) {
    return std::fabs(a.r) > std::fabs(b.r);
  });
  return rows;
}

EraComparison era_compare(const FeatureMatrix& matrix, const std::vector<int>& years,
                          int split_year, const std::string& focus_id) {
  const auto n = static_cast<std::size_t>(matrix.values.rows());
  if (years.size() != n) throw ShapeError("years/matrix size mismatch");
  const auto focus_it = std::find(matrix.ids.begin(), matrix.ids.end(), focus_id);
  if (focus_it == matrix.ids.end()) {
    throw ValueError("focus document '" + focus_id + "' is not in the corpus");
  }
  const auto focus = static_cast<std::size_t>(focus_it - matrix.ids.begin());

  std::vector<std::size_t> before, after;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == focus) continue;
    (years[i] < split_year ? before : after).push_back(i);
  }
  if (before.empty() || after.empty()) {
    throw InsufficientData("era comparison needs documents on both sides of " +
                           std::to_string(split_year));
  }

  const auto column_subset = [&](std::size_t f, const std::vector<std::size_t>& idx) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      v[static_cast<Eigen::Index>(i)] =
          matrix.values(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(f));
    }
    return v;
  };

  EraComparison cmp;
  cmp.split_year = split_year;
  cmp.focus_id = focus_id;
  cmp.rows.reserve(matrix.columns.size());
  for (std::size_t f = 0; f < matrix.columns.size(); ++f) {
    EraRow row;
    row.descriptor = matrix.columns[f];
    row.focus_value =
        matrix.values(static_cast<Eigen::Index>(focus), static_cast<Eigen::Index>(f));
    row.before = group_summary(column_subset(f, before));
    row.after = group_summary(column_subset(f, after));
    try {
      row.sigma_before = sigma_difference(row.focus_value, row.before);
    } catch (const DegenerateInput&) {
      row.degenerate_before = true;
    }
    try {
      row.sigma_after = sigma_difference(row.focus_value, row.after);
    } catch (const DegenerateInput&) {
      row.degenerate_after = true;
    }
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

GenreComparison genre_compare(const FeatureMatrix& matrix,
                              const std::vector<Genre>& genres) {
  const auto n = static_cast<std::size_t>(matrix.values.rows());
  if (genres.size() != n) throw ShapeError("genres/matrix size mismatch");

  std::vector<std::size_t> comedies, tragedies;
  for (std::size_t i = 0; i < n; ++i) {
    if (genres[i] == Genre::comedy) comedies.push_back(i);
    if (genres[i] == Genre::tragedy) tragedies.push_back(i);
  }
  if (comedies.size() < 2 || tragedies.size() < 2) {
    throw InsufficientData("genre comparison needs at least 2 comedies and 2 tragedies");
  }

  const auto column_subset = [&](std::size_t f, const std::vector<std::size_t>& idx) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) {
      v[static_cast<Eigen::Index>(i)] =
          matrix.values(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(f));
    }
    return v;
  };

  GenreComparison cmp;
  cmp.class_a = genre_name(Genre::comedy);
  cmp.class_b = genre_name(Genre::tragedy);
  cmp.rows.reserve(matrix.columns.size());
  for (std::size_t f = 0; f < matrix.columns.size(); ++f) {
    GenreRow row;
    row.descriptor = matrix.columns[f];
    const Eigen::VectorXd a = column_subset(f, comedies);
    const Eigen::VectorXd b = column_subset(f, tragedies);
    row.class_a = group_summary(a);
    row.class_b = group_summary(b);
    try {
      row.ttest = welch_ttest(a, b);
    } catch (const DegenerateInput&) {
      row.degenerate = true;
      row.ttest = TTestResult{0.0, 0.0, 1.0};
    }
    cmp.rows.push_back(std::move(row));
  }
  return cmp;
}

void scatter_svg(const std::vector<std::pair<double, double>>& pairs,
                 const std::filesystem::path& out) {
  if (pairs.empty()) throw InsufficientData("scatter plot needs at least one pair");

  double lo = pairs.front().first, hi = pairs.front().first;
  for (const auto& [a, p] : pairs) {
    lo = std::min({lo, a, p});
    hi = std::max({hi, a, p});
  }
  if (lo == hi) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  constexpr double kSize = 640.0;
  constexpr double kMargin = 70.0;
  const double span = kSize - 2.0 * kMargin;
  const auto sx = [&](double v) { return kMargin + (v - lo) / (hi - lo) * span; };
  const auto sy = [&](double v) { return kSize - kMargin - (v - lo) / (hi - lo) * span; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";
  // Axes.
  svg << "<line x1=\"" << format_fixed(kMargin, 2) << "\" y1=\"" << format_fixed(kSize - kMargin, 2)
      << "\" x2=\"" << format_fixed(kSize - kMargin, 2) << "\" y2=\""
      << format_fixed(kSize - kMargin, 2) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << format_fixed(kMargin, 2) << "\" y1=\"" << format_fixed(kMargin, 2)
      << "\" x2=\"" << format_fixed(kMargin, 2) << "\" y2=\"" << format_fixed(kSize - kMargin, 2)
      << "\" stroke=\"black\"/>\n";
  // Year ticks.
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    const std::string label = format_fixed(v, 0);
    svg << "<text x=\"" << format_fixed(sx(v), 2) << "\" y=\""
        << format_fixed(kSize - kMargin + 24.0, 2)
        << "\" font-size=\"13\" text-anchor=\"middle\">" << label << "</text>\n";
    svg << "<text x=\"" << format_fixed(kMargin - 10.0, 2) << "\" y=\""
        << format_fixed(sy(v) + 4.0, 2)
        << "\" font-size=\"13\" text-anchor=\"end\">" << label << "</text>\n";
  }
  svg << "<text x=\"320\" y=\"625\" font-size=\"15\" text-anchor=\"middle\">actual year"
         "</text>\n";
  svg << "<text x=\"18\" y=\"320\" font-size=\"15\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 18 320)\">predicted year</text>\n";
  // Identity reference.
  svg << "<line x1=\"" << format_fixed(sx(lo), 2) << "\" y1=\"" << format_fixed(sy(lo), 2)
      << "\" x2=\"" << format_fixed(sx(hi), 2) << "\" y2=\"" << format_fixed(sy(hi), 2)
      << "\" stroke=\"#999999\" stroke-dasharray=\"6 4\"/>\n";
  for (const auto& [a, p] : pairs) {
    svg << "<circle cx=\"" << format_fixed(sx(a), 2) << "\" cy=\"" << format_fixed(sy(p), 2)
        << "\" r=\"4.5\" fill=\"#1f77b4\" fill-opacity=\"0.75\"/>\n";
  }
  svg << "</svg>\n";

  std::ofstream f = open_output(out);
  f << svg.str();
  finish_output(f, out);
}

void write_feature_matrix(const FeatureMatrix& matrix, const std::filesystem::path& out) {
  std::ofstream f = open_output(out);
  f << "id";
  for (const std::string& name : matrix.columns) f << ',' << csv_escape(name);
  f << '\n';
  for (std::size_t i = 0; i < matrix.ids.size(); ++i) {
    f << csv_escape(matrix.ids[i]);
    for (Eigen::Index c = 0; c < matrix.values.cols(); ++c) {
      f << ',' << format_csv_double(matrix.values(static_cast<Eigen::Index>(i), c));
    }
    f << '\n';
  }
  finish_output(f, out);
}

void write_trends(const std::vector<TrendRow>& rows, const std::filesystem::path& out) {
  std::ofstream f = open_output(out);
  f << "descriptor,r,p,n,degenerate\n";
  for (const TrendRow& row : rows) {
    f << csv_escape(row.descriptor) << ',' << format_csv_double(row.r) << ','
      << format_csv_double(row.p) << ',' << row.n << ',' << (row.degenerate ? 1 : 0)
      << '\n';
  }
  finish_output(f, out);
}

void write_predictions(const RegressionResult& result, const std::filesystem::path& out) {
  std::ofstream f = open_output(out);
  f << "id,actual_year,predicted_year\n";
  for (const PredictionRow& row : result.rows) {
    f << csv_escape(row.id) << ',' << row.actual_year << ','
      << format_csv_double(row.predicted_year) << '\n';
  }
  finish_output(f, out);
}

void write_era(const EraComparison& cmp, const std::filesystem::path& out) {
  std::ofstream f = open_output(out);
  f << "descriptor,focus_value,before_mean,before_se,before_n,after_mean,after_se,"
       "after_n,sigma_before,sigma_after,degenerate_before,degenerate_after\n";
  for (const EraRow& row : cmp.rows) {
    f << csv_escape(row.descriptor) << ',' << format_csv_double(row.focus_value) << ','
      << format_csv_double(row.before.mean) << ',' << format_csv_double(row.before.se)
      << ',' << row.before.n << ',' << format_csv_double(row.after.mean) << ','
      << format_csv_double(row.after.se) << ',' << row.after.n << ','
      << format_csv_double(row.sigma_before) << ',' << format_csv_double(row.sigma_after)
      << ',' << (row.degenerate_before ? 1 : 0) << ',' << (row.degenerate_after ? 1 : 0)
      << '\n';
  }
  finish_output(f, out);
}

void write_genre(const GenreComparison& cmp, const std::filesystem::path& out) {
  std::ofstream f = open_output(out);
  f << "descriptor," << cmp.class_a << "_mean," << cmp.class_a << "_se," << cmp.class_a
    << "_n," << cmp.class_b << "_mean," << cmp.class_b << "_se," << cmp.class_b
    << "_n,t,df,p,degenerate\n";
  for (const GenreRow& row : cmp.rows) {
    f << csv_escape(row.descriptor) << ',' << format_csv_double(row.class_a.mean) << ','
      << format_csv_double(row.class_a.se) << ',' << row.class_a.n << ','
      << format_csv_double(row.class_b.mean) << ',' << format_csv_double(row.class_b.se)
      << ',' << row.class_b.n << ',' << format_csv_double(row.ttest.t) << ','
      << format_csv_double(row.ttest.df) << ',' << format_csv_double(row.ttest.p_two_tailed)
      << ',' << (row.degenerate ? 1 : 0) << '\n';
  }
  finish_output(f, out);
}

void write_classification(const ClassificationResult& result, int k, int train_per_class,
                          int test_per_class, const std::filesystem::path& out) {
  ordered_json j;
  j["seed"] = result.seed;
  j["runs"] = result.runs;
  j["k"] = k;
  j["train_per_class"] = train_per_class;
  j["test_per_class"] = test_per_class;
  j["classes"] = result.class_names;
  j["accuracy"] = result.accuracy;
  ordered_json detail = ordered_json::array();
  for (const HoldoutRun& run : result.run_records) {
    ordered_json r;
    r["train"] = run.train_ids;
    r["test"] = run.test_ids;
    r["actual"] = run.actual;
    r["predicted"] = run.predicted;
    detail.push_back(std::move(r));
  }
  j["run_detail"] = std::move(detail);

  std::ofstream f = open_output(out);
  f << j.dump(2) << '\n';
  finish_output(f, out);
}

int run_pipeline(const PipelineConfig& cfg, std::ostream& out, std::ostream& err) {
  std::string stage = "setup";
  try {
    std::vector<std::string> warnings;

    stage = "manifest";
    const Manifest manifest = load_manifest(cfg.manifest_path, &warnings);
    if (manifest.entries.empty()) throw InsufficientData("empty corpus");

    stage = "lexicons";
    const Lexicons lex = load_lexicons(cfg.lexicon_dir, &warnings);

    stage = "corpus";
    std::vector<CleanDocument> docs;
    for (auto& [record, doc] : load_corpus(manifest, cfg.cleaning, &warnings)) {
      docs.push_back(std::move(doc));
    }

    stage = "extract";
    const DescriptorCatalog catalog = DescriptorCatalog::build(lex, cfg.features);
    const FeatureMatrix matrix =
        build_feature_matrix(docs, lex, cfg.features, catalog, cfg.jobs, &warnings);

    std::filesystem::create_directories(cfg.out_dir);
    write_feature_matrix(matrix, cfg.out_dir / "features.csv");

    std::vector<int> years;
    std::vector<Genre> genres;
    for (const PlayRecord& rec : manifest.entries) {
      years.push_back(rec.year);
      genres.push_back(rec.genre);
    }

    stage = "trends";
    const std::vector<TrendRow> trends = trend_report(matrix, years);
    write_trends(trends, cfg.out_dir / "trends.csv");

    stage = "predict";
    const RegressionResult regression =
        loo_predict_years(matrix, years, cfg.k, cfg.scheme, cfg.jobs);
    write_predictions(regression, cfg.out_dir / "predictions.csv");
    std::vector<std::pair<double, double>> pairs;
    for (const PredictionRow& row : regression.rows) {
      pairs.emplace_back(static_cast<double>(row.actual_year), row.predicted_year);
    }
    scatter_svg(pairs, cfg.out_dir / "scatter.svg");

    stage = "era";
    const std::string focus_id =
        cfg.focus_id.empty() ? manifest.entries.front().id : cfg.focus_id;
    bool era_written = false;
    try {
      const EraComparison era = era_compare(matrix, years, cfg.split_year, focus_id);
      write_era(era, cfg.out_dir / "era.csv");
      era_written = true;
    } catch (const InsufficientData& e) {
      warnings.push_back(std::string("era comparison skipped: ") + e.what());
      EraComparison empty;
      empty.split_year = cfg.split_year;
      empty.focus_id = focus_id;
      write_era(empty, cfg.out_dir / "era.csv");
    }

    stage = "genre";
    bool genre_written = false;
    try {
      const GenreComparison genre = genre_compare(matrix, genres);
      write_genre(genre, cfg.out_dir / "genre.csv");
      genre_written = true;
    } catch (const InsufficientData& e) {
      warnings.push_back(std::string("genre comparison skipped: ") + e.what());
      GenreComparison empty;
      empty.class_a = genre_name(Genre::comedy);
      empty.class_b = genre_name(Genre::tragedy);
      write_genre(empty, cfg.out_dir / "genre.csv");
    }

    stage = "run.json";
    ordered_json j;
    j["tool"] = "stylochron";
    j["catalog_version"] = kCatalogVersion;
    j["descriptor_count"] = catalog.size();
    ordered_json jc;
    jc["seed"] = cfg.seed;
    jc["k"] = cfg.k;
    jc["weights"] = cfg.scheme == WeightScheme::abs_r ? "abs_r" : "r_squared";
    jc["segments"] = cfg.features.homogeneity_segments;
    jc["drift_segments"] = cfg.features.drift_segments;
    jc["dft_bins"] = cfg.features.dft_bins;
    jc["split_year"] = cfg.split_year;
    jc["focus"] = focus_id;
    jc["strip_speaker_labels"] = cfg.cleaning.speaker_labels == SpeakerLabelPolicy::strip;
    jc["start_marker"] = cfg.cleaning.start_marker.value_or("");
    jc["end_marker"] = cfg.cleaning.end_marker.value_or("");
    jc["jobs"] = cfg.jobs;
    j["config"] = std::move(jc);
    ordered_json jr;
    jr["documents"] = manifest.entries.size();
    jr["loo_r"] = regression.summary.r;
    jr["loo_p"] = regression.summary.p_two_tailed;
    jr["era_compared"] = era_written;
    jr["genre_compared"] = genre_written;
    j["results"] = std::move(jr);
    j["warnings"] = warnings;

    {
      std::ofstream f = open_output(cfg.out_dir / "run.json");
      f << j.dump(2) << '\n';
      finish_output(f, cfg.out_dir / "run.json");
    }

    for (const std::string& w : warnings) err << "warning: " << w << '\n';
    out << "wrote " << (cfg.out_dir / "run.json").string() << " (documents="
        << manifest.entries.size() << ", descriptors=" << catalog.size()
        << ", loo_r=" << format_csv_double(regression.summary.r) << ")\n";
    return 0;
  } catch (const Error& e) {
    err << "error [" << stage << "]: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error [" << stage << "]: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace stylochron
