#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stylochron/corpus.hpp"
#include "stylochron/errors.hpp"

namespace stylochron {

enum class TokenKind { word, number, punct };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::word;
  std::size_t start = 0;  // byte offsets into the source text
  std::size_t end = 0;
};

struct Sentence {
  std::vector<Token> tokens;
  std::size_t index = 0;  // ordinal within the document
};

// Penn-style tag set. PRPS stands in for PRP$.
enum class PosTag {
  NN, NNS, NNP,
  VB, VBD, VBG, VBN, VBP, VBZ,
  PRP, PRPS,
  JJ, JJR, JJS,
  RB, RBR, RBS,
  CC, IN, MD, DT, CD, UH, WP, EX, TO,
  OTHER,
};

inline constexpr int kPosTagCount = static_cast<int>(PosTag::OTHER) + 1;

const char* pos_tag_name(PosTag tag);
PosTag pos_tag_from_name(std::string_view name);  // throws ValueError

enum class SentimentCategory {
  very_negative = 0,
  negative = 1,
  neutral = 2,
  positive = 3,
  very_positive = 4,
};

struct Lexicons {
  std::unordered_map<std::string, PosTag> pos;
  std::unordered_map<std::string, double> valence;
  std::unordered_set<std::string> negators;
  // Ordered by topic name so derived descriptor catalogs are stable.
  std::map<std::string, std::unordered_set<std::string>> topics;
};

/// Load pos.tsv, sentiment.tsv, negators.txt and topics/*.txt from a
/// directory. Duplicate lexicon rows keep the first entry and add a warning.
Lexicons load_lexicons(const std::filesystem::path& dir,
                       std::vector<std::string>* warnings = nullptr);

/// Split text into word, number and punctuation tokens. Words are maximal
/// letter runs with internal apostrophes or hyphens; numbers are digit runs
/// with internal ',' or '.'; every other non-whitespace codepoint is a single
/// punct token. No case folding happens here.
std::vector<Token> tokenize(std::string_view text);

const std::vector<std::string>& default_abbreviations();  // Mr, Mrs, St, Dr

/// Group tokens into sentences. '.', '!' and '?' end a sentence unless the
/// preceding word is a configured abbreviation; runs of terminators stay with
/// the sentence they close; trailing tokens form a final sentence.
std::vector<Sentence> segment_sentences(
    std::string_view text,
    const std::vector<std::string>& abbreviations = default_abbreviations());
std::vector<Sentence> segment_sentences(
    const CleanDocument& doc,
    const std::vector<std::string>& abbreviations = default_abbreviations());

/// Tag every word and number token of the sentence. Resolution order:
/// number -> CD; lexicon; suffix rules -ly/-est/-ing/-ed/-s; capitalized
/// non-sentence-initial -> NNP; default NN. Punct tokens are skipped.
std::vector<std::pair<Token, PosTag>> tag_pos(const Sentence& sentence,
                                              const Lexicons& lex);

/// Lexicon sentiment on the 0..4 scale. A word's valence flips sign when a
/// negator occurs within the 3 preceding word tokens of the same sentence.
SentimentCategory score_sentiment(const Sentence& sentence, const Lexicons& lex);

/// American Soundex: first letter plus three digits. Non-ASCII letters are
/// dropped before coding; throws NotCodable when nothing remains.
std::string soundex_code(std::string_view word);

/// ASCII lowercase copy (the case folding used for all lexicon lookups).
std::string ascii_lower(std::string_view s);

}  // namespace stylochron
