#include "stylochron/features.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <complex>
#include <iterator>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <unordered_set>

#include "stylochron/errors.hpp"
#include "stylochron/utf8.hpp"

namespace stylochron {

namespace {

bool cp_is_letter(char32_t cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return false;
}

bool cp_is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

std::size_t count_letters(std::string_view surface) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < surface.size();) {
    const utf8::Decoded d = utf8::decode(surface, i);
    if (d.len == 0) break;
    if (cp_is_letter(d.cp)) ++n;
    i += d.len;
  }
  return n;
}

std::size_t count_alnum(std::string_view surface) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < surface.size();) {
    const utf8::Decoded d = utf8::decode(surface, i);
    if (d.len == 0) break;
    if (cp_is_letter(d.cp) || cp_is_digit(d.cp)) ++n;
    i += d.len;
  }
  return n;
}

double population_std(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size()));
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double m = 0.0;
  for (double x : xs) m += x;
  return m / static_cast<double>(xs.size());
}

struct TagGroup {
  const char* name;
  std::vector<PosTag> tags;
};

const std::vector<TagGroup>& dft_tag_groups() {
  static const std::vector<TagGroup> kGroups = {
      {"noun", {PosTag::NN, PosTag::NNS, PosTag::NNP}},
      {"verb", {PosTag::VB, PosTag::VBD, PosTag::VBG, PosTag::VBN, PosTag::VBP, PosTag::VBZ}},
      {"adjective", {PosTag::JJ, PosTag::JJR, PosTag::JJS}},
      {"adverb", {PosTag::RB, PosTag::RBR, PosTag::RBS}},
      {"pronoun", {PosTag::PRP, PosTag::PRPS}},
  };
  return kGroups;
}

// Punctuation marks tracked by punctuation_freqs, with descriptor suffixes.
const std::vector<std::pair<const char*, const char*>>& tracked_puncts() {
  static const std::vector<std::pair<const char*, const char*>> kPuncts = {
      {".", "period"},  {",", "comma"},      {";", "semicolon"}, {":", "colon"},
      {"!", "exclaim"}, {"?", "question"},   {"'", "apostrophe"}, {"\"", "quote"},
      {"-", "hyphen"},  {"(", "lparen"},     {")", "rparen"},
  };
  return kPuncts;
}

std::string sanitize_topic_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  for (char c : name) {
    const char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    out.push_back((l >= 'a' && l <= 'z') || (l >= '0' && l <= '9') ? l : '_');
  }
  return out;
}

// Equal split of n items into s segments: item i goes to floor(i*s/n).
std::size_t segment_of(std::size_t i, std::size_t n, std::size_t s) {
  return i * s / n;
}

void warn(std::vector<std::string>* warnings, std::string msg) {
  if (warnings) warnings->push_back(std::move(msg));
}

}  // namespace

AnalyzedDocument analyze(const CleanDocument& doc, const Lexicons& lex) {
  AnalyzedDocument out;
  out.id = doc.id;
  out.tokens = tokenize(doc.text);
  out.sentences = segment_sentences(doc.text);
  out.sentence_sentiment.reserve(out.sentences.size());
  for (const Sentence& s : out.sentences) {
    auto tagged = tag_pos(s, lex);
    out.tagged.insert(out.tagged.end(), tagged.begin(), tagged.end());
    out.sentence_sentiment.push_back(score_sentiment(s, lex));
  }
  return out;
}

PartialFeatures lexical_stats(const AnalyzedDocument& doc) {
  PartialFeatures out;

  std::vector<double> word_lengths;
  for (const Token& t : doc.tokens) {
    if (t.kind == TokenKind::word) {
      word_lengths.push_back(static_cast<double>(count_letters(t.surface)));
    }
  }
  out.emplace_back("word_length_mean", mean_of(word_lengths));
  out.emplace_back("word_length_std", population_std(word_lengths));
  // Length bins 1..11 and 12+.
  std::array<double, 12> wbins{};
  for (double len : word_lengths) {
    const int bin = std::min(static_cast<int>(len), 12);
    wbins[std::max(bin, 1) - 1] += 1.0;
  }
  for (int b = 1; b <= 11; ++b) {
    out.emplace_back("word_length_hist_" + std::to_string(b),
                     word_lengths.empty() ? 0.0 : wbins[b - 1] / word_lengths.size());
  }
  out.emplace_back("word_length_hist_12plus",
                   word_lengths.empty() ? 0.0 : wbins[11] / word_lengths.size());

  std::vector<double> sentence_lengths;
  for (const Sentence& s : doc.sentences) {
    std::size_t nwords = 0;
    for (const Token& t : s.tokens) {
      if (t.kind == TokenKind::word) ++nwords;
    }
    sentence_lengths.push_back(static_cast<double>(nwords));
  }
  out.emplace_back("sentence_length_mean", mean_of(sentence_lengths));
  out.emplace_back("sentence_length_std", population_std(sentence_lengths));
  // Bins 1-5, 6-10, ..., 36-40, 41+ (a zero-word sentence counts in the first bin).
  std::array<double, 9> sbins{};
  for (double len : sentence_lengths) {
    const int l = static_cast<int>(len);
    const int bin = l <= 5 ? 0 : std::min((l - 1) / 5, 8);
    sbins[bin] += 1.0;
  }
  static const char* kSentBinNames[9] = {"1_5",   "6_10",  "11_15", "16_20", "21_25",
                                         "26_30", "31_35", "36_40", "41plus"};
  for (int b = 0; b < 9; ++b) {
    out.emplace_back(std::string("sentence_length_hist_") + kSentBinNames[b],
                     sentence_lengths.empty() ? 0.0 : sbins[b] / sentence_lengths.size());
  }
  return out;
}

PartialFeatures punctuation_freqs(const AnalyzedDocument& doc) {
  PartialFeatures out;
  const double total = static_cast<double>(doc.tokens.size());
  for (const auto& [mark, suffix] : tracked_puncts()) {
    std::size_t count = 0;
    for (const Token& t : doc.tokens) {
      if (t.kind == TokenKind::punct && t.surface == mark) ++count;
    }
    out.emplace_back(std::string("freq_") + suffix, total == 0.0 ? 0.0 : count / total);
  }
  return out;
}

PartialFeatures vocabulary_stats(const AnalyzedDocument& doc, const FeatureConfig& cfg) {
  PartialFeatures out;

  std::vector<std::string> words;
  for (const Token& t : doc.tokens) {
    if (t.kind == TokenKind::word) words.push_back(ascii_lower(t.surface));
  }
  const std::size_t n = words.size();

  // Type counts, kept in first-appearance order for reproducible iteration.
  std::unordered_map<std::string, std::size_t> type_index;
  std::vector<std::vector<double>> segment_counts;  // per type, per segment
  std::vector<double> totals;
  const std::size_t S = static_cast<std::size_t>(cfg.homogeneity_segments);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = type_index.emplace(words[i], type_index.size());
    if (inserted) {
      segment_counts.emplace_back(S, 0.0);
      totals.push_back(0.0);
    }
    segment_counts[it->second][segment_of(i, n, S)] += 1.0;
    totals[it->second] += 1.0;
  }

  out.emplace_back("word_diversity",
                   n == 0 ? 0.0 : static_cast<double>(type_index.size()) / n);

  std::vector<double> homogeneity;
  for (std::size_t t = 0; t < totals.size(); ++t) {
    const double c = totals[t];
    if (c < cfg.homogeneity_min_count) continue;
    const double expected = c / static_cast<double>(S);
    double dev = 0.0;
    for (double cs : segment_counts[t]) dev += std::fabs(cs - expected);
    homogeneity.push_back(dev / (static_cast<double>(S) * c));
  }
  out.emplace_back("word_homogeneity_mean", mean_of(homogeneity));
  out.emplace_back("word_homogeneity_std", population_std(homogeneity));
  return out;
}

PartialFeatures quotation_stats(const AnalyzedDocument& doc) {
  PartialFeatures out;
  std::vector<std::size_t> quote_positions;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    if (doc.tokens[i].kind == TokenKind::punct && doc.tokens[i].surface == "\"") {
      quote_positions.push_back(i);
    }
  }
  const std::size_t spans = quote_positions.size() / 2;  // unpaired trailing quote ignored
  std::vector<double> span_lengths;
  for (std::size_t p = 0; p < spans; ++p) {
    const std::size_t a = quote_positions[2 * p];
    const std::size_t b = quote_positions[2 * p + 1];
    std::size_t nwords = 0;
    for (std::size_t i = a + 1; i < b; ++i) {
      if (doc.tokens[i].kind == TokenKind::word) ++nwords;
    }
    span_lengths.push_back(static_cast<double>(nwords));
  }
  const double nsent = static_cast<double>(doc.sentences.size());
  out.emplace_back("quote_freq", nsent == 0.0 ? 0.0 : spans / nsent);
  out.emplace_back("quote_length_mean", mean_of(span_lengths));
  return out;
}

PartialFeatures pos_freqs(const AnalyzedDocument& doc) {
  PartialFeatures out;
  std::array<double, kPosTagCount> counts{};
  for (const auto& [tok, tag] : doc.tagged) counts[static_cast<int>(tag)] += 1.0;
  const double total = static_cast<double>(doc.tagged.size());
  auto freq = [&](PosTag t) {
    return total == 0.0 ? 0.0 : counts[static_cast<int>(t)] / total;
  };
  for (int i = 0; i < kPosTagCount; ++i) {
    out.emplace_back(std::string("tag_freq_") + pos_tag_name(static_cast<PosTag>(i)),
                     total == 0.0 ? 0.0 : counts[i] / total);
  }
  out.emplace_back("noun_freq", freq(PosTag::NN) + freq(PosTag::NNS) + freq(PosTag::NNP));
  out.emplace_back("verb_freq", freq(PosTag::VB) + freq(PosTag::VBD) + freq(PosTag::VBG) +
                                    freq(PosTag::VBN) + freq(PosTag::VBP) + freq(PosTag::VBZ));
  out.emplace_back("pronoun_freq", freq(PosTag::PRP) + freq(PosTag::PRPS));
  out.emplace_back("adjective_freq", freq(PosTag::JJ));
  out.emplace_back("adjective_comparative", freq(PosTag::JJR));
  out.emplace_back("adjective_superlative", freq(PosTag::JJS));
  out.emplace_back("adverb_freq", freq(PosTag::RB) + freq(PosTag::RBR) + freq(PosTag::RBS));
  out.emplace_back("adverb_comparative", freq(PosTag::RBR));
  out.emplace_back("adverb_superlative", freq(PosTag::RBS));
  out.emplace_back("conjunction_freq", freq(PosTag::CC));
  out.emplace_back("modal_freq", freq(PosTag::MD));
  return out;
}

std::pair<double, double> dft_spectrum_summary(Eigen::Ref<const Eigen::VectorXd> x) {
  const auto bins = x.size();
  if (bins < 2) return {0.0, 0.0};
  const double B = static_cast<double>(bins);
  double sum = 0.0, max = 0.0;
  const auto half = bins / 2;
  for (Eigen::Index k = 1; k <= half; ++k) {
    std::complex<double> acc{0.0, 0.0};
    for (Eigen::Index b = 0; b < bins; ++b) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) *
                           static_cast<double>(b) / B;
      acc += x[b] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    const double mag = std::abs(acc) / B;
    sum += mag;
    max = std::max(max, mag);
  }
  return {sum / static_cast<double>(half), max};
}

PartialFeatures pos_dft(const AnalyzedDocument& doc, const FeatureConfig& cfg) {
  PartialFeatures out;
  const std::size_t B = static_cast<std::size_t>(cfg.dft_bins);

  // Tag sequence over word tokens only.
  std::vector<PosTag> word_tags;
  for (const auto& [tok, tag] : doc.tagged) {
    if (tok.kind == TokenKind::word) word_tags.push_back(tag);
  }
  const std::size_t n = word_tags.size();

  for (const TagGroup& group : dft_tag_groups()) {
    double dft_mean = 0.0, dft_max = 0.0;
    if (n >= B) {
      Eigen::VectorXd series = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(B));
      Eigen::VectorXd bin_sizes = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(B));
      for (std::size_t i = 0; i < n; ++i) {
        const auto b = static_cast<Eigen::Index>(segment_of(i, n, B));
        bin_sizes[b] += 1.0;
        if (std::find(group.tags.begin(), group.tags.end(), word_tags[i]) !=
            group.tags.end()) {
          series[b] += 1.0;
        }
      }
      series = series.cwiseQuotient(bin_sizes);
      std::tie(dft_mean, dft_max) = dft_spectrum_summary(series);
    }
    out.emplace_back(std::string("dft_") + group.name + "_mean", dft_mean);
    out.emplace_back(std::string("dft_") + group.name + "_max", dft_max);
  }
  return out;
}

PartialFeatures sentiment_features(const AnalyzedDocument& doc, const FeatureConfig& cfg,
                                   std::vector<std::string>* warnings) {
  PartialFeatures out;
  const std::size_t n = doc.sentence_sentiment.size();
  std::array<double, 5> counts{};
  std::vector<double> values;
  values.reserve(n);
  for (const SentimentCategory c : doc.sentence_sentiment) {
    counts[static_cast<int>(c)] += 1.0;
    values.push_back(static_cast<double>(static_cast<int>(c)));
  }
  for (int c = 0; c < 5; ++c) {
    out.emplace_back("sent_freq_" + std::to_string(c), n == 0 ? 0.0 : counts[c] / n);
  }
  if (n == 0) {
    warn(warnings, "document '" + doc.id + "': no sentences; sentiment_mean reported as 0");
  }
  out.emplace_back("sentiment_mean", mean_of(values));
  out.emplace_back("sentiment_std", population_std(values));

  double drift = 0.0;
  if (n > 0) {
    const std::size_t D = static_cast<std::size_t>(cfg.drift_segments);
    std::vector<double> seg_sum(D, 0.0), seg_n(D, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t s = segment_of(i, n, D);
      seg_sum[s] += values[i];
      seg_n[s] += 1.0;
    }
    std::vector<double> seg_means;
    for (std::size_t s = 0; s < D; ++s) {
      if (seg_n[s] > 0.0) seg_means.push_back(seg_sum[s] / seg_n[s]);
    }
    drift = population_std(seg_means);
  }
  out.emplace_back("sentiment_drift", drift);
  return out;
}

PartialFeatures readability_indices(const AnalyzedDocument& doc,
                                    std::vector<std::string>* warnings) {
  PartialFeatures out;
  double words = 0.0, letters = 0.0, alnum = 0.0;
  for (const Token& t : doc.tokens) {
    if (t.kind == TokenKind::word || t.kind == TokenKind::number) {
      words += 1.0;
      letters += static_cast<double>(count_letters(t.surface));
      alnum += static_cast<double>(count_alnum(t.surface));
    }
  }
  const double sentences = static_cast<double>(doc.sentences.size());
  if (words == 0.0 || sentences == 0.0) {
    warn(warnings, "document '" + doc.id + "': readability not computable, reported as 0");
    out.emplace_back("ari", 0.0);
    out.emplace_back("coleman_liau", 0.0);
    return out;
  }
  out.emplace_back("ari", 4.71 * (alnum / words) + 0.5 * (words / sentences) - 21.43);
  const double L = 100.0 * letters / words;
  const double S = 100.0 * sentences / words;
  out.emplace_back("coleman_liau", 0.0588 * L - 0.296 * S - 15.8);
  return out;
}

PartialFeatures soundex_features(const AnalyzedDocument& doc, const FeatureConfig& cfg) {
  PartialFeatures out;
  std::vector<std::string> codes;  // empty string = uncodable word
  for (const Token& t : doc.tokens) {
    if (t.kind != TokenKind::word) continue;
    try {
      codes.push_back(soundex_code(t.surface));
    } catch (const NotCodable&) {
      codes.emplace_back();
    }
  }
  const std::size_t n = codes.size();

  std::unordered_set<std::string> distinct;
  for (const std::string& c : codes) {
    if (!c.empty()) distinct.insert(c);
  }
  out.emplace_back("soundex_diversity",
                   n == 0 ? 0.0 : static_cast<double>(distinct.size()) / n);

  double drift = 0.0;
  if (n > 0) {
    const std::size_t D = static_cast<std::size_t>(cfg.drift_segments);
    std::vector<std::unordered_map<std::string, double>> seg_counts(D);
    for (std::size_t i = 0; i < n; ++i) {
      if (!codes[i].empty()) seg_counts[segment_of(i, n, D)][codes[i]] += 1.0;
    }
    std::vector<double> dissimilarities;
    for (std::size_t s = 0; s + 1 < D; ++s) {
      const auto& a = seg_counts[s];
      const auto& b = seg_counts[s + 1];
      if (a.empty() || b.empty()) continue;
      double dot = 0.0, na = 0.0, nb = 0.0;
      for (const auto& [code, ca] : a) {
        na += ca * ca;
        if (const auto it = b.find(code); it != b.end()) dot += ca * it->second;
      }
      for (const auto& [code, cb] : b) nb += cb * cb;
      dissimilarities.push_back(1.0 - dot / std::sqrt(na * nb));
    }
    drift = mean_of(dissimilarities);
  }
  out.emplace_back("soundex_drift", drift);
  return out;
}

PartialFeatures number_usage(const AnalyzedDocument& doc) {
  PartialFeatures out;
  std::size_t cd = 0;
  for (const auto& [tok, tag] : doc.tagged) {
    if (tag == PosTag::CD) ++cd;
  }
  out.emplace_back("number_freq", doc.tagged.empty()
                                      ? 0.0
                                      : static_cast<double>(cd) / doc.tagged.size());
  return out;
}

PartialFeatures topic_freqs(const AnalyzedDocument& doc, const Lexicons& lex) {
  PartialFeatures out;
  std::vector<std::string> words;
  for (const Token& t : doc.tokens) {
    if (t.kind == TokenKind::word) words.push_back(ascii_lower(t.surface));
  }
  for (const auto& [topic, vocab] : lex.topics) {
    std::size_t hits = 0;
    for (const std::string& w : words) {
      if (vocab.count(w)) ++hits;
    }
    out.emplace_back("topic_" + sanitize_topic_name(topic) + "_freq",
                     words.empty() ? 0.0 : static_cast<double>(hits) / words.size());
  }
  return out;
}

DescriptorCatalog DescriptorCatalog::build(const Lexicons& lex, const FeatureConfig& cfg) {
  (void)cfg;
  DescriptorCatalog cat;
  auto add = [&](std::string name, Family family, bool unit, bool doubling) {
    cat.index_.emplace(name, cat.entries_.size());
    cat.entries_.push_back({std::move(name), family, unit, doubling});
  };

  add("word_length_mean", Family::lexical, false, true);
  add("word_length_std", Family::lexical, false, true);
  for (int b = 1; b <= 11; ++b) {
    add("word_length_hist_" + std::to_string(b), Family::lexical, true, true);
  }
  add("word_length_hist_12plus", Family::lexical, true, true);
  add("sentence_length_mean", Family::lexical, false, true);
  add("sentence_length_std", Family::lexical, false, true);
  for (const char* bin : {"1_5", "6_10", "11_15", "16_20", "21_25", "26_30", "31_35",
                          "36_40", "41plus"}) {
    add(std::string("sentence_length_hist_") + bin, Family::lexical, true, true);
  }

  for (const auto& [mark, suffix] : tracked_puncts()) {
    (void)mark;
    add(std::string("freq_") + suffix, Family::punctuation, true, true);
  }

  add("word_diversity", Family::vocabulary, true, false);
  add("word_homogeneity_mean", Family::vocabulary, true, false);
  add("word_homogeneity_std", Family::vocabulary, true, false);

  add("quote_freq", Family::quotation, false, true);
  add("quote_length_mean", Family::quotation, false, true);

  for (int i = 0; i < kPosTagCount; ++i) {
    add(std::string("tag_freq_") + pos_tag_name(static_cast<PosTag>(i)), Family::pos,
        true, true);
  }
  for (const char* name : {"noun_freq", "verb_freq", "pronoun_freq", "adjective_freq",
                           "adjective_comparative", "adjective_superlative", "adverb_freq",
                           "adverb_comparative", "adverb_superlative", "conjunction_freq",
                           "modal_freq"}) {
    add(name, Family::pos, true, true);
  }

  for (const TagGroup& group : dft_tag_groups()) {
    add(std::string("dft_") + group.name + "_mean", Family::pos_dft, true, false);
    add(std::string("dft_") + group.name + "_max", Family::pos_dft, true, false);
  }

  for (int c = 0; c < 5; ++c) {
    add("sent_freq_" + std::to_string(c), Family::sentiment, true, true);
  }
  add("sentiment_mean", Family::sentiment, false, true);
  add("sentiment_std", Family::sentiment, false, true);
  add("sentiment_drift", Family::sentiment, false, false);

  add("ari", Family::readability, false, true);
  add("coleman_liau", Family::readability, false, true);

  add("soundex_diversity", Family::soundex, true, false);
  add("soundex_drift", Family::soundex, true, false);

  add("number_freq", Family::numbers, true, true);

  for (const auto& [topic, vocab] : lex.topics) {
    (void)vocab;
    add("topic_" + sanitize_topic_name(topic) + "_freq", Family::topics, true, true);
  }
  return cat;
}

std::optional<std::size_t> DescriptorCatalog::find(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> DescriptorCatalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const Descriptor& d : entries_) out.push_back(d.name);
  return out;
}

FeatureVector extract_all(const CleanDocument& doc, const Lexicons& lex,
                          const FeatureConfig& cfg, const DescriptorCatalog& catalog,
                          std::vector<std::string>* warnings) {
  const AnalyzedDocument a = analyze(doc, lex);

  PartialFeatures all;
  auto append = [&](PartialFeatures part) {
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  };
  append(lexical_stats(a));
  append(punctuation_freqs(a));
  append(vocabulary_stats(a, cfg));
  append(quotation_stats(a));
  append(pos_freqs(a));
  append(pos_dft(a, cfg));
  append(sentiment_features(a, cfg, warnings));
  append(readability_indices(a, warnings));
  append(soundex_features(a, cfg));
  append(number_usage(a));
  append(topic_freqs(a, lex));

  FeatureVector fv;
  fv.id = doc.id;
  fv.values = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(catalog.size()),
                                        std::numeric_limits<double>::quiet_NaN());
  if (all.size() != catalog.size()) {
    throw Error("descriptor count mismatch: computed " + std::to_string(all.size()) +
                ", catalog has " + std::to_string(catalog.size()));
  }
  for (auto& [name, value] : all) {
    const auto idx = catalog.find(name);
    if (!idx) throw Error("descriptor '" + name + "' missing from catalog");
    if (!std::isfinite(value)) {
      throw Error("descriptor '" + name + "' is not finite for document '" + doc.id + "'");
    }
    fv.values[static_cast<Eigen::Index>(*idx)] = value;
  }
  return fv;
}

}  // namespace stylochron
