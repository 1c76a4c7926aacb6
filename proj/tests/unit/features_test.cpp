#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "stylochron/corpus.hpp"
#include "stylochron/features.hpp"
#include "stylochron/rng.hpp"
#include "stylochron/textproc.hpp"
#include "support/docgen.hpp"

using namespace stylochron;

namespace {

CleanDocument doc_of(std::string_view text, std::string id = "doc") {
  return clean_text(text, CleaningRules{}, std::move(id));
}

AnalyzedDocument analyzed(std::string_view text, const Lexicons& lex = Lexicons{}) {
  return analyze(doc_of(text), lex);
}

double value_of(const PartialFeatures& feats, std::string_view name) {
  for (const auto& [n, v] : feats) {
    if (n == name) return v;
  }
  FAIL("descriptor not found: " << name);
  return 0.0;
}

const Lexicons& shipped_lexicons() {
  static const Lexicons lex = load_lexicons(std::string(STYLOCHRON_DATA_DIR) + "/lexicons");
  return lex;
}

}  // namespace

TEST_SUITE("lexical_stats") {
  TEST_CASE("word and sentence length means") {
    const auto feats = lexical_stats(analyzed("aa bb. cc."));
    CHECK(value_of(feats, "word_length_mean") == doctest::Approx(2.0));
    CHECK(value_of(feats, "word_length_std") == 0.0);
    CHECK(value_of(feats, "sentence_length_mean") == doctest::Approx(1.5));
    CHECK(value_of(feats, "sentence_length_std") == doctest::Approx(0.5));
    CHECK(value_of(feats, "word_length_hist_2") == doctest::Approx(1.0));
    CHECK(value_of(feats, "word_length_hist_3") == 0.0);
    CHECK(value_of(feats, "sentence_length_hist_1_5") == doctest::Approx(1.0));
  }

  TEST_CASE("single word has zero spread") {
    const auto feats = lexical_stats(analyzed("word."));
    CHECK(value_of(feats, "word_length_mean") == doctest::Approx(4.0));
    CHECK(value_of(feats, "word_length_std") == 0.0);
  }

  TEST_CASE("long words land in the overflow bin") {
    const auto feats = lexical_stats(analyzed("extraordinarily."));
    CHECK(value_of(feats, "word_length_hist_12plus") == doctest::Approx(1.0));
  }

  TEST_CASE("sentence length bins") {
    // 6 single-letter words, then 1.
    const auto feats = lexical_stats(analyzed("a b c d e f. g."));
    CHECK(value_of(feats, "sentence_length_hist_6_10") == doctest::Approx(0.5));
    CHECK(value_of(feats, "sentence_length_hist_1_5") == doctest::Approx(0.5));
  }

  TEST_CASE("empty document yields zeros") {
    const auto feats = lexical_stats(analyzed(""));
    for (const auto& [name, value] : feats) {
      CAPTURE(name);
      CHECK(value == 0.0);
    }
  }

  TEST_CASE("letters are counted in codepoints") {
    const auto feats = lexical_stats(analyzed("café."));
    CHECK(value_of(feats, "word_length_mean") == doctest::Approx(4.0));
  }

  TEST_CASE("histogram sums to one") {
    SplitMix64 rng(51);
    const auto doc = analyzed(testsupport::make_document(rng));
    const auto feats = lexical_stats(doc);
    double wsum = 0.0, ssum = 0.0;
    for (const auto& [name, value] : feats) {
      if (name.rfind("word_length_hist_", 0) == 0) wsum += value;
      if (name.rfind("sentence_length_hist_", 0) == 0) ssum += value;
    }
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(ssum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_SUITE("punctuation_freqs") {
  TEST_CASE("question marks over all tokens") {
    const auto feats = punctuation_freqs(analyzed("a? b?"));
    CHECK(value_of(feats, "freq_question") == doctest::Approx(0.5));
    CHECK(value_of(feats, "freq_period") == 0.0);
  }

  TEST_CASE("empty document yields zeros") {
    for (const auto& [name, value] : punctuation_freqs(analyzed(""))) {
      CAPTURE(name);
      CHECK(value == 0.0);
    }
  }
}

TEST_SUITE("vocabulary_stats") {
  TEST_CASE("diversity is types over tokens") {
    CHECK(value_of(vocabulary_stats(analyzed("a b c d."), FeatureConfig{}),
                   "word_diversity") == doctest::Approx(1.0));
    CHECK(value_of(vocabulary_stats(analyzed("a a a a."), FeatureConfig{}),
                   "word_diversity") == doctest::Approx(0.25));
  }

  TEST_CASE("case folds for types") {
    CHECK(value_of(vocabulary_stats(analyzed("The the THE."), FeatureConfig{}),
                   "word_diversity") == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("perfectly even word is perfectly homogeneous") {
    std::string text;
    for (int i = 0; i < 20; ++i) text += "w ";
    text += ".";
    const auto feats = vocabulary_stats(analyzed(text), FeatureConfig{});
    CHECK(value_of(feats, "word_homogeneity_mean") == doctest::Approx(0.0));
  }

  TEST_CASE("rare words are skipped") {
    const auto feats = vocabulary_stats(analyzed("a b c d."), FeatureConfig{});
    CHECK(value_of(feats, "word_homogeneity_mean") == 0.0);
    CHECK(value_of(feats, "word_homogeneity_std") == 0.0);
  }

  TEST_CASE("clustered word scores higher than an even one") {
    // 40 words; "w" fills the first half in one text, alternates in the other.
    std::string clustered, even;
    for (int i = 0; i < 20; ++i) clustered += "w ";
    for (int i = 0; i < 20; ++i) clustered += "x ";
    for (int i = 0; i < 20; ++i) even += "w x ";
    const auto hc = value_of(vocabulary_stats(analyzed(clustered + "."), FeatureConfig{}),
                             "word_homogeneity_mean");
    const auto he = value_of(vocabulary_stats(analyzed(even + "."), FeatureConfig{}),
                             "word_homogeneity_mean");
    CHECK(hc > he);
  }
}

TEST_SUITE("quotation_stats") {
  TEST_CASE("no quotes") {
    const auto feats = quotation_stats(analyzed("plain words here."));
    CHECK(value_of(feats, "quote_freq") == 0.0);
    CHECK(value_of(feats, "quote_length_mean") == 0.0);
  }

  TEST_CASE("single span") {
    const auto feats = quotation_stats(analyzed("He said \"go now\" twice."));
    CHECK(value_of(feats, "quote_freq") == doctest::Approx(1.0));
    CHECK(value_of(feats, "quote_length_mean") == doctest::Approx(2.0));
  }

  TEST_CASE("spans pair left to right") {
    const auto feats = quotation_stats(analyzed("\"a\" \"b c\"."));
    CHECK(value_of(feats, "quote_freq") == doctest::Approx(2.0));
    CHECK(value_of(feats, "quote_length_mean") == doctest::Approx(1.5));
  }

  TEST_CASE("unpaired trailing quote is ignored") {
    const auto feats = quotation_stats(analyzed("a \" b."));
    CHECK(value_of(feats, "quote_freq") == 0.0);
  }
}

TEST_SUITE("pos_freqs") {
  TEST_CASE("grouped frequencies") {
    Lexicons lex;
    lex.pos["he"] = PosTag::PRP;
    lex.pos["runs"] = PosTag::VBZ;
    const auto feats = pos_freqs(analyzed("he runs.", lex));
    CHECK(value_of(feats, "pronoun_freq") == doctest::Approx(0.5));
    CHECK(value_of(feats, "verb_freq") == doctest::Approx(0.5));
    CHECK(value_of(feats, "noun_freq") == 0.0);
    CHECK(value_of(feats, "tag_freq_PRP") == doctest::Approx(0.5));
    CHECK(value_of(feats, "tag_freq_VBZ") == doctest::Approx(0.5));
  }

  TEST_CASE("tag frequencies sum to one on nonempty documents") {
    SplitMix64 rng(52);
    const auto doc = analyzed(testsupport::make_document(rng), shipped_lexicons());
    double sum = 0.0;
    for (const auto& [name, value] : pos_freqs(doc)) {
      if (name.rfind("tag_freq_", 0) == 0) sum += value;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("empty document yields zeros") {
    for (const auto& [name, value] : pos_freqs(analyzed(""))) {
      CAPTURE(name);
      CHECK(value == 0.0);
    }
  }
}

TEST_SUITE("dft_spectrum_summary") {
  TEST_CASE("constant series has an empty spectrum") {
    const auto [mean, max] = dft_spectrum_summary(Eigen::VectorXd::Ones(32));
    CHECK(mean == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(max == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("alternating series peaks at the Nyquist bin") {
    Eigen::VectorXd x(32);
    for (int i = 0; i < 32; ++i) x[i] = (i % 2 == 0) ? 1.0 : 0.0;
    const auto [mean, max] = dft_spectrum_summary(x);
    CHECK(max == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mean == doctest::Approx(0.03125).epsilon(1e-10));
  }
}

TEST_SUITE("pos_dft") {
  TEST_CASE("alternating tags produce the alternating spectrum") {
    Lexicons lex;
    lex.pos["na"] = PosTag::NN;
    lex.pos["vo"] = PosTag::VB;
    std::string text;
    for (int i = 0; i < 16; ++i) text += "na vo ";
    text += ".";
    const auto feats = pos_dft(analyzed(text, lex), FeatureConfig{});
    CHECK(value_of(feats, "dft_noun_max") == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(value_of(feats, "dft_noun_mean") == doctest::Approx(0.03125).epsilon(1e-10));
    CHECK(value_of(feats, "dft_verb_max") == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(value_of(feats, "dft_adjective_max") == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("documents shorter than the bin count yield zeros") {
    const auto feats = pos_dft(analyzed("short text."), FeatureConfig{});
    for (const auto& [name, value] : feats) {
      CAPTURE(name);
      CHECK(value == 0.0);
    }
  }

  TEST_CASE("constant tag series yields a zero spectrum") {
    Lexicons lex;
    lex.pos["na"] = PosTag::NN;
    std::string text;
    for (int i = 0; i < 32; ++i) text += "na ";
    text += ".";
    const auto feats = pos_dft(analyzed(text, lex), FeatureConfig{});
    CHECK(value_of(feats, "dft_noun_max") == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_SUITE("sentiment_features") {
  TEST_CASE("neutral document") {
    const auto feats = sentiment_features(analyzed("a b. c d."), FeatureConfig{});
    CHECK(value_of(feats, "sentiment_mean") == doctest::Approx(2.0));
    CHECK(value_of(feats, "sentiment_std") == 0.0);
    CHECK(value_of(feats, "sentiment_drift") == 0.0);
    CHECK(value_of(feats, "sent_freq_2") == doctest::Approx(1.0));
  }

  TEST_CASE("extreme categories average out") {
    Lexicons lex;
    lex.valence["dire"] = -3.0;
    lex.valence["bliss"] = 3.0;
    const auto feats = sentiment_features(analyzed("dire. bliss.", lex), FeatureConfig{});
    CHECK(value_of(feats, "sentiment_mean") == doctest::Approx(2.0));
    CHECK(value_of(feats, "sentiment_std") == doctest::Approx(2.0));
    CHECK(value_of(feats, "sent_freq_0") == doctest::Approx(0.5));
    CHECK(value_of(feats, "sent_freq_4") == doctest::Approx(0.5));
  }

  TEST_CASE("no sentences warns and reports zero") {
    std::vector<std::string> warnings;
    const auto feats = sentiment_features(analyzed(""), FeatureConfig{}, &warnings);
    CHECK(value_of(feats, "sentiment_mean") == 0.0);
    CHECK(warnings.size() == 1);
  }

  TEST_CASE("category frequencies sum to one") {
    SplitMix64 rng(53);
    const auto doc = analyzed(testsupport::make_document(rng), shipped_lexicons());
    const auto feats = sentiment_features(doc, FeatureConfig{});
    double sum = 0.0;
    for (const auto& [name, value] : feats) {
      if (name.rfind("sent_freq_", 0) == 0) sum += value;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_SUITE("readability_indices") {
  TEST_CASE("hand-computed reference sentence") {
    const auto feats = readability_indices(analyzed("The cat sat on the mat."));
    CHECK(value_of(feats, "ari") == doctest::Approx(-5.0855).epsilon(1e-3));
    CHECK(value_of(feats, "coleman_liau") == doctest::Approx(-4.0733).epsilon(1e-3));
  }

  TEST_CASE("empty document warns and reports zeros") {
    std::vector<std::string> warnings;
    const auto feats = readability_indices(analyzed(""), &warnings);
    CHECK(value_of(feats, "ari") == 0.0);
    CHECK(value_of(feats, "coleman_liau") == 0.0);
    CHECK(warnings.size() == 1);
  }

  TEST_CASE("numbers count as words") {
    const auto with = readability_indices(analyzed("The year 1601 was hard."));
    CHECK(std::isfinite(value_of(with, "ari")));
  }
}

TEST_SUITE("soundex_features") {
  TEST_CASE("identical words collapse to one code") {
    const auto feats = soundex_features(analyzed("he he he."), FeatureConfig{});
    CHECK(value_of(feats, "soundex_diversity") == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("uniform code distribution has no drift") {
    std::string text;
    for (int i = 0; i < 10; ++i) text += "he ";
    text += ".";
    const auto feats = soundex_features(analyzed(text), FeatureConfig{});
    CHECK(value_of(feats, "soundex_drift") == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("empty document yields zeros") {
    const auto feats = soundex_features(analyzed(""), FeatureConfig{});
    CHECK(value_of(feats, "soundex_diversity") == 0.0);
    CHECK(value_of(feats, "soundex_drift") == 0.0);
  }
}

TEST_SUITE("number_usage") {
  TEST_CASE("numeral share of tagged tokens") {
    Lexicons lex;
    lex.pos["two"] = PosTag::CD;
    lex.pos["four"] = PosTag::CD;
    const auto feats = number_usage(analyzed("two plus two is four.", lex));
    CHECK(value_of(feats, "number_freq") == doctest::Approx(0.6));
  }

  TEST_CASE("digit tokens count too") {
    const auto feats = number_usage(analyzed("in 1601."));
    CHECK(value_of(feats, "number_freq") == doctest::Approx(0.5));
  }
}

TEST_SUITE("topic_freqs") {
  TEST_CASE("topic share of word tokens") {
    Lexicons lex;
    lex.topics["summer"] = {"summer", "sun"};
    const auto feats = topic_freqs(analyzed("winter winter summer.", lex), lex);
    CHECK(value_of(feats, "topic_summer_freq") == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("no topics no descriptors") {
    Lexicons lex;
    CHECK(topic_freqs(analyzed("a b."), lex).empty());
  }
}

TEST_SUITE("descriptor catalog") {
  TEST_CASE("names are unique and findable") {
    const auto catalog = DescriptorCatalog::build(shipped_lexicons(), FeatureConfig{});
    CHECK(catalog.size() >= 100);
    std::set<std::string> seen;
    for (const auto& d : catalog.entries()) {
      CHECK(seen.insert(d.name).second);
      REQUIRE(catalog.find(d.name).has_value());
      CHECK(catalog.at(*catalog.find(d.name)).name == d.name);
    }
    CHECK(!catalog.find("no_such_descriptor").has_value());
  }

  TEST_CASE("shipped topics appear as descriptors") {
    const auto catalog = DescriptorCatalog::build(shipped_lexicons(), FeatureConfig{});
    CHECK(catalog.find("topic_fall_freq").has_value());
    CHECK(catalog.find("topic_summer_freq").has_value());
    CHECK(catalog.find("topic_weather_freq").has_value());
  }
}

TEST_SUITE("extract_all") {
  TEST_CASE("values follow catalog order and repeat identically") {
    const auto& lex = shipped_lexicons();
    const auto catalog = DescriptorCatalog::build(lex, FeatureConfig{});
    SplitMix64 rng(54);
    const auto doc = doc_of(testsupport::make_document(rng));
    const auto a = extract_all(doc, lex, FeatureConfig{}, catalog);
    const auto b = extract_all(doc, lex, FeatureConfig{}, catalog);
    CHECK(a.id == doc.id);
    REQUIRE(a.values.size() == static_cast<Eigen::Index>(catalog.size()));
    CHECK((a.values.array() == b.values.array()).all());
  }

  TEST_CASE("appending whitespace changes nothing") {
    const auto& lex = shipped_lexicons();
    const auto catalog = DescriptorCatalog::build(lex, FeatureConfig{});
    SplitMix64 rng(55);
    const std::string text = testsupport::make_document(rng);
    const auto a = extract_all(doc_of(text), lex, FeatureConfig{}, catalog);
    const auto b = extract_all(doc_of(text + "\n \n"), lex, FeatureConfig{}, catalog);
    CHECK((a.values.array() == b.values.array()).all());
  }

  TEST_CASE("unit-interval descriptors stay in bounds") {
    const auto& lex = shipped_lexicons();
    const auto catalog = DescriptorCatalog::build(lex, FeatureConfig{});
    SplitMix64 rng(56);
    for (int i = 0; i < 5; ++i) {
      const auto fv = extract_all(doc_of(testsupport::make_document(rng)), lex,
                                  FeatureConfig{}, catalog);
      for (std::size_t d = 0; d < catalog.size(); ++d) {
        if (!catalog.at(d).unit_interval) continue;
        CAPTURE(catalog.at(d).name);
        CHECK(fv.values[static_cast<Eigen::Index>(d)] >= 0.0);
        CHECK(fv.values[static_cast<Eigen::Index>(d)] <= 1.0);
      }
    }
  }

  TEST_CASE("doubling a document keeps intensive descriptors") {
    const auto& lex = shipped_lexicons();
    const auto catalog = DescriptorCatalog::build(lex, FeatureConfig{});
    SplitMix64 rng(57);
    const std::string text = testsupport::make_document(rng);
    const auto once = extract_all(doc_of(text), lex, FeatureConfig{}, catalog);
    const auto twice = extract_all(doc_of(text + "\n" + text), lex, FeatureConfig{}, catalog);
    for (std::size_t d = 0; d < catalog.size(); ++d) {
      if (!catalog.at(d).doubling_invariant) continue;
      CAPTURE(catalog.at(d).name);
      CHECK(std::fabs(once.values[static_cast<Eigen::Index>(d)] -
                      twice.values[static_cast<Eigen::Index>(d)]) <= 1e-9);
    }
  }

  TEST_CASE("empty document extracts to zeros with warnings") {
    const auto& lex = shipped_lexicons();
    const auto catalog = DescriptorCatalog::build(lex, FeatureConfig{});
    std::vector<std::string> warnings;
    const auto fv = extract_all(doc_of(""), lex, FeatureConfig{}, catalog, &warnings);
    for (Eigen::Index i = 0; i < fv.values.size(); ++i) CHECK(fv.values[i] == 0.0);
    CHECK(warnings.size() >= 2);
  }
}
