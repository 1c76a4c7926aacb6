#pragma once

// Deterministic generator of well-formed plain-text documents for property
// tests: every sentence ends with a terminator, double quotes are balanced,
// and the vocabulary exercises contractions, hyphens, numbers, names, and
// sentiment words.

#include <string>
#include <vector>

#include "stylochron/rng.hpp"

namespace testsupport {

inline const std::vector<std::string>& vocabulary() {
  static const std::vector<std::string> kWords = {
      "the",     "and",      "to",      "of",        "a",        "in",
      "that",    "is",       "was",     "he",        "she",      "it",
      "they",    "we",       "thou",    "thee",      "doth",     "hath",
      "o'er",    "ne'er",    "love",    "hate",      "sweet",    "death",
      "joy",     "sorrow",   "fair",    "foul",      "noble",    "villain",
      "king",    "queen",    "ghost",   "dagger",    "crown",    "storm",
      "summer",  "winter",   "autumn",  "rain",      "thunder",  "wind",
      "swiftly", "slowly",   "sweeter", "sweetest",  "more",     "most",
      "could",   "shall",    "will",    "must",      "not",      "never",
      "three",   "twenty",   "hundred", "lily-white", "moon",    "sun",
      "night",   "day",      "blood",   "heart",     "soul",     "mind",
      "speak",   "speaks",   "spoke",   "speaking",  "run",      "running",
      "walked",  "dreams",   "dreamed", "stars",     "garden",   "castle",
  };
  return kWords;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "Hamlet", "Verona", "Denmark", "Juliet", "Macbeth", "Rome",
  };
  return kNames;
}

// One generated sentence, terminator included.
inline std::string make_sentence(stylochron::SplitMix64& rng) {
  const std::size_t nwords = 3 + rng.below(16);
  std::string s;
  std::size_t quote_open_at = nwords + 1;
  for (std::size_t w = 0; w < nwords; ++w) {
    if (!s.empty()) s += ' ';
    if (quote_open_at > nwords && w + 3 < nwords && rng.below(12) == 0) {
      s += '"';
      quote_open_at = w + 1 + rng.below(2);
    }
    if (rng.below(10) == 0) {
      s += names()[rng.below(names().size())];
    } else if (rng.below(25) == 0) {
      s += std::to_string(1500 + rng.below(200));
    } else {
      s += vocabulary()[rng.below(vocabulary().size())];
    }
    if (quote_open_at <= nwords && w >= quote_open_at) {
      s += '"';
      quote_open_at = nwords + 1;
    } else if (w + 1 < nwords && rng.below(8) == 0) {
      s += (rng.below(3) == 0) ? ';' : ',';
    }
  }
  if (quote_open_at <= nwords) s += '"';
  const std::uint64_t t = rng.below(6);
  s += t < 3 ? '.' : (t < 5 ? '!' : '?');
  return s;
}

inline std::string make_document(stylochron::SplitMix64& rng, std::size_t min_sentences = 8,
                                 std::size_t max_sentences = 60) {
  const std::size_t n = min_sentences + rng.below(max_sentences - min_sentences + 1);
  std::string text;
  for (std::size_t i = 0; i < n; ++i) {
    text += make_sentence(rng);
    text += (rng.below(4) == 0) ? "\n" : " ";
  }
  text += "\n";
  return text;
}

}  // namespace testsupport
