#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stylochron/corpus.hpp"
#include "stylochron/textproc.hpp"

namespace stylochron {

enum class Family {
  lexical,
  punctuation,
  vocabulary,
  quotation,
  pos,
  pos_dft,
  sentiment,
  readability,
  soundex,
  numbers,
  topics,
};

struct Descriptor {
  std::string name;
  Family family = Family::lexical;
  // True when the value is a proportion bounded to [0, 1].
  bool unit_interval = false;
  // True when the value is intensive: concatenating a well-formed document
  // (terminated sentences, balanced quotes) with itself leaves it unchanged.
  bool doubling_invariant = false;
};

/// Bumped whenever the descriptor set or any descriptor definition changes.
inline constexpr const char* kCatalogVersion = "1";

struct FeatureConfig {
  int homogeneity_segments = 20;   // S
  int drift_segments = 10;         // sentiment / soundex drift
  int dft_bins = 32;               // B
  int homogeneity_min_count = 5;   // word types below this are skipped
};

class DescriptorCatalog {
 public:
  static DescriptorCatalog build(const Lexicons& lex, const FeatureConfig& cfg);

  std::size_t size() const { return entries_.size(); }
  const Descriptor& at(std::size_t i) const { return entries_[i]; }
  const std::vector<Descriptor>& entries() const { return entries_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::vector<Descriptor> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct FeatureVector {
  std::string id;
  Eigen::VectorXd values;  // catalog order
};

// Tokenized, segmented, tagged and sentiment-scored view of one document.
struct AnalyzedDocument {
  std::string id;
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
  // Word and number tokens with their tags, flattened in document order.
  std::vector<std::pair<Token, PosTag>> tagged;
  std::vector<SentimentCategory> sentence_sentiment;
};

AnalyzedDocument analyze(const CleanDocument& doc, const Lexicons& lex);

// Name/value pairs produced by one descriptor family.
using PartialFeatures = std::vector<std::pair<std::string, double>>;

PartialFeatures lexical_stats(const AnalyzedDocument& doc);
PartialFeatures punctuation_freqs(const AnalyzedDocument& doc);
PartialFeatures vocabulary_stats(const AnalyzedDocument& doc, const FeatureConfig& cfg);
PartialFeatures quotation_stats(const AnalyzedDocument& doc);
PartialFeatures pos_freqs(const AnalyzedDocument& doc);
PartialFeatures pos_dft(const AnalyzedDocument& doc, const FeatureConfig& cfg);
PartialFeatures sentiment_features(const AnalyzedDocument& doc, const FeatureConfig& cfg,
                                   std::vector<std::string>* warnings = nullptr);
PartialFeatures readability_indices(const AnalyzedDocument& doc,
                                    std::vector<std::string>* warnings = nullptr);
PartialFeatures soundex_features(const AnalyzedDocument& doc, const FeatureConfig& cfg);
PartialFeatures number_usage(const AnalyzedDocument& doc);
PartialFeatures topic_freqs(const AnalyzedDocument& doc, const Lexicons& lex);

/// Magnitude spectrum summary used by pos_dft: mean and max of |X_k| / B for
/// k = 1..B/2 of the real series x (length B).
std::pair<double, double> dft_spectrum_summary(Eigen::Ref<const Eigen::VectorXd> x);

/// Run the full pipeline on one document and assemble the vector in catalog
/// order. Throws only for encoding problems; anything NotComputable degrades
/// to 0 plus a warning.
FeatureVector extract_all(const CleanDocument& doc, const Lexicons& lex,
                          const FeatureConfig& cfg, const DescriptorCatalog& catalog,
                          std::vector<std::string>* warnings = nullptr);

}  // namespace stylochron
