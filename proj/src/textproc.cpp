#include "stylochron/textproc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "stylochron/utf8.hpp"

namespace stylochron {

namespace utf8 {

Decoded decode(std::string_view s, std::size_t i) {
  if (i >= s.size()) return {};
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return i + k < s.size() &&
           (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
  };
  auto bits = [&](std::size_t k) {
    return static_cast<char32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F);
  };
  if ((b0 & 0xE0) == 0xC0) {
    if (!cont(1)) return {};
    const char32_t cp = ((b0 & 0x1Fu) << 6) | bits(1);
    if (cp < 0x80) return {};  // overlong
    return {cp, 2};
  }
  if ((b0 & 0xF0) == 0xE0) {
    if (!cont(1) || !cont(2)) return {};
    const char32_t cp = ((b0 & 0x0Fu) << 12) | (bits(1) << 6) | bits(2);
    if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return {};
    return {cp, 3};
  }
  if ((b0 & 0xF8) == 0xF0) {
    if (!cont(1) || !cont(2) || !cont(3)) return {};
    const char32_t cp =
        ((b0 & 0x07u) << 18) | (bits(1) << 12) | (bits(2) << 6) | bits(3);
    if (cp < 0x10000 || cp > 0x10FFFF) return {};
    return {cp, 4};
  }
  return {};
}

bool valid(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    const Decoded d = decode(s, i);
    if (d.len == 0) return false;
    i += d.len;
  }
  return true;
}

std::size_t count_codepoints(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size();) {
    const Decoded d = decode(s, i);
    if (d.len == 0) return n + (s.size() - i);  // count stray bytes one by one
    i += d.len;
    ++n;
  }
  return n;
}

}  // namespace utf8

namespace {

bool is_ascii_letter(char32_t cp) {
  return (cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z');
}

// ASCII letters plus Latin-1 Supplement / Latin Extended-A/B letters.
bool is_letter(char32_t cp) {
  if (is_ascii_letter(cp)) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return false;
}

bool is_digit(char32_t cp) { return cp >= '0' && cp <= '9'; }

bool is_space(char32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\v' ||
         cp == '\f' || cp == 0xA0;
}

bool is_apostrophe(char32_t cp) { return cp == '\'' || cp == 0x2019; }

const std::array<const char*, kPosTagCount> kTagNames = {
    "NN", "NNS", "NNP", "VB",  "VBD", "VBG", "VBN", "VBP", "VBZ",
    "PRP", "PRPS", "JJ",  "JJR", "JJS", "RB",  "RBR", "RBS", "CC",
    "IN",  "MD",  "DT",  "CD",  "UH",  "WP",  "EX",  "TO",  "OTHER"};

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

bool is_terminator(const Token& tok) {
  return tok.kind == TokenKind::punct &&
         (tok.surface == "." || tok.surface == "!" || tok.surface == "?");
}

int soundex_digit(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'b': case 'f': case 'p': case 'v': return 1;
    case 'c': case 'g': case 'j': case 'k':
    case 'q': case 's': case 'x': case 'z': return 2;
    case 'd': case 't': return 3;
    case 'l': return 4;
    case 'm': case 'n': return 5;
    case 'r': return 6;
    default: return 0;  // vowels and y
  }
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("lexicon file not found: " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

void warn(std::vector<std::string>* warnings, std::string msg) {
  if (warnings) warnings->push_back(std::move(msg));
}

}  // namespace

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

const char* pos_tag_name(PosTag tag) {
  return kTagNames[static_cast<int>(tag)];
}

PosTag pos_tag_from_name(std::string_view name) {
  for (int i = 0; i < kPosTagCount; ++i) {
    if (name == kTagNames[i]) return static_cast<PosTag>(i);
  }
  if (name == "PRP$") return PosTag::PRPS;
  throw ValueError("unknown POS tag: " + std::string(name));
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    utf8::Decoded d = utf8::decode(text, i);
    if (d.len == 0) {  // stray byte: treat as a single punct
      tokens.push_back({std::string(text.substr(i, 1)), TokenKind::punct, i, i + 1});
      ++i;
      continue;
    }
    if (is_space(d.cp)) {
      i += d.len;
      continue;
    }
    const std::size_t start = i;
    if (is_letter(d.cp)) {
      i += d.len;
      while (i < text.size()) {
        const utf8::Decoded c = utf8::decode(text, i);
        if (c.len == 0) break;
        if (is_letter(c.cp)) {
          i += c.len;
          continue;
        }
        if (is_apostrophe(c.cp) || c.cp == '-') {
          const utf8::Decoded nxt = utf8::decode(text, i + c.len);
          if (nxt.len != 0 && is_letter(nxt.cp)) {  // internal only
            i += c.len + nxt.len;
            continue;
          }
        }
        break;
      }
      tokens.push_back({std::string(text.substr(start, i - start)),
                        TokenKind::word, start, i});
      continue;
    }
    if (is_digit(d.cp)) {
      i += d.len;
      while (i < text.size()) {
        const utf8::Decoded c = utf8::decode(text, i);
        if (c.len == 0) break;
        if (is_digit(c.cp)) {
          i += c.len;
          continue;
        }
        if (c.cp == ',' || c.cp == '.') {
          const utf8::Decoded nxt = utf8::decode(text, i + c.len);
          if (nxt.len != 0 && is_digit(nxt.cp)) {
            i += c.len + nxt.len;
            continue;
          }
        }
        break;
      }
      tokens.push_back({std::string(text.substr(start, i - start)),
                        TokenKind::number, start, i});
      continue;
    }
    i += d.len;
    tokens.push_back(
        {std::string(text.substr(start, i - start)), TokenKind::punct, start, i});
  }
  return tokens;
}

const std::vector<std::string>& default_abbreviations() {
  static const std::vector<std::string> kAbbrevs = {"Mr", "Mrs", "St", "Dr"};
  return kAbbrevs;
}

std::vector<Sentence> segment_sentences(
    std::string_view text, const std::vector<std::string>& abbreviations) {
  const std::vector<Token> tokens = tokenize(text);
  std::vector<Sentence> sentences;
  Sentence current;
  auto flush = [&] {
    if (!current.tokens.empty()) {
      current.index = sentences.size();
      sentences.push_back(std::move(current));
      current = Sentence{};
    }
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    current.tokens.push_back(tokens[i]);
    if (!is_terminator(tokens[i])) continue;
    // An abbreviation immediately before the terminator suppresses the break.
    bool suppressed = false;
    if (i > 0 && tokens[i - 1].kind == TokenKind::word) {
      for (const auto& a : abbreviations) {
        if (iequals(tokens[i - 1].surface, a)) {
          suppressed = true;
          break;
        }
      }
    }
    if (suppressed) continue;
    while (i + 1 < tokens.size() && is_terminator(tokens[i + 1])) {
      current.tokens.push_back(tokens[++i]);
    }
    flush();
  }
  flush();
  return sentences;
}

std::vector<Sentence> segment_sentences(
    const CleanDocument& doc, const std::vector<std::string>& abbreviations) {
  return segment_sentences(doc.text, abbreviations);
}

std::vector<std::pair<Token, PosTag>> tag_pos(const Sentence& sentence,
                                              const Lexicons& lex) {
  std::vector<std::pair<Token, PosTag>> out;
  bool sentence_initial = true;
  for (const Token& tok : sentence.tokens) {
    if (tok.kind == TokenKind::punct) continue;
    PosTag tag = PosTag::NN;
    if (tok.kind == TokenKind::number) {
      tag = PosTag::CD;
    } else {
      const std::string lower = ascii_lower(tok.surface);
      if (auto it = lex.pos.find(lower); it != lex.pos.end()) {
        tag = it->second;
      } else if (ends_with(lower, "ly")) {
        tag = PosTag::RB;
      } else if (ends_with(lower, "est")) {
        tag = PosTag::JJS;
      } else if (ends_with(lower, "ing")) {
        tag = PosTag::VBG;
      } else if (ends_with(lower, "ed")) {
        tag = PosTag::VBD;
      } else if (ends_with(lower, "s")) {
        tag = PosTag::NNS;
      } else {
        const utf8::Decoded first = utf8::decode(tok.surface, 0);
        const bool capitalized =
            first.len != 0 && ((first.cp >= 'A' && first.cp <= 'Z') ||
                               (first.cp >= 0xC0 && first.cp <= 0xDE && first.cp != 0xD7));
        tag = (capitalized && !sentence_initial) ? PosTag::NNP : PosTag::NN;
      }
    }
    out.emplace_back(tok, tag);
    sentence_initial = false;
  }
  return out;
}

SentimentCategory score_sentiment(const Sentence& sentence, const Lexicons& lex) {
  std::vector<std::string> words;
  words.reserve(sentence.tokens.size());
  for (const Token& tok : sentence.tokens) {
    if (tok.kind == TokenKind::word) words.push_back(ascii_lower(tok.surface));
  }
  double s = 0.0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto it = lex.valence.find(words[i]);
    if (it == lex.valence.end()) continue;
    bool negated = false;
    const std::size_t lo = i >= 3 ? i - 3 : 0;
    for (std::size_t j = lo; j < i; ++j) {
      if (lex.negators.count(words[j])) {
        negated = true;
        break;
      }
    }
    s += negated ? -it->second : it->second;
  }
  if (s <= -3.0) return SentimentCategory::very_negative;
  if (s <= -0.5) return SentimentCategory::negative;
  if (s < 0.5) return SentimentCategory::neutral;
  if (s < 3.0) return SentimentCategory::positive;
  return SentimentCategory::very_positive;
}

std::string soundex_code(std::string_view word) {
  std::string letters;
  letters.reserve(word.size());
  for (char c : word) {
    if (is_ascii_letter(static_cast<unsigned char>(c))) letters.push_back(c);
  }
  if (letters.empty()) {
    throw NotCodable("soundex_code: no ASCII letters in \"" + std::string(word) + "\"");
  }
  std::string code;
  code.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(letters[0]))));
  int prev = soundex_digit(letters[0]);
  for (std::size_t i = 1; i < letters.size() && code.size() < 4; ++i) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(letters[i])));
    if (lower == 'h' || lower == 'w') continue;  // do not separate equal codes
    const int d = soundex_digit(lower);
    if (d == 0) {
      prev = 0;  // vowels (and y) reset the run
      continue;
    }
    if (d != prev) code.push_back(static_cast<char>('0' + d));
    prev = d;
  }
  code.resize(4, '0');
  return code;
}

Lexicons load_lexicons(const std::filesystem::path& dir,
                       std::vector<std::string>* warnings) {
  Lexicons lex;

  const auto pos_path = dir / "pos.tsv";
  std::size_t lineno = 0;
  for (const std::string& line : read_lines(pos_path)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ValueError("pos.tsv:" + std::to_string(lineno) + ": expected word<TAB>tag");
    }
    const std::string word = ascii_lower(line.substr(0, tab));
    const PosTag tag = pos_tag_from_name(line.substr(tab + 1));
    if (!lex.pos.emplace(word, tag).second) {
      warn(warnings, "pos.tsv:" + std::to_string(lineno) + ": duplicate word '" +
                         word + "', first entry kept");
    }
  }

  const auto val_path = dir / "sentiment.tsv";
  lineno = 0;
  for (const std::string& line : read_lines(val_path)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ValueError("sentiment.tsv:" + std::to_string(lineno) +
                       ": expected word<TAB>valence");
    }
    const std::string word = ascii_lower(line.substr(0, tab));
    double valence = 0.0;
    try {
      valence = std::stod(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ValueError("sentiment.tsv:" + std::to_string(lineno) + ": bad valence");
    }
    if (!lex.valence.emplace(word, valence).second) {
      warn(warnings, "sentiment.tsv:" + std::to_string(lineno) + ": duplicate word '" +
                         word + "', first entry kept");
    }
  }

  for (const std::string& line : read_lines(dir / "negators.txt")) {
    if (line.empty() || line[0] == '#') continue;
    lex.negators.insert(ascii_lower(line));
  }

  const auto topics_dir = dir / "topics";
  if (std::filesystem::is_directory(topics_dir)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(topics_dir)) {
      if (entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
      auto& set = lex.topics[file.stem().string()];
      for (const std::string& line : read_lines(file)) {
        if (line.empty() || line[0] == '#') continue;
        set.insert(ascii_lower(line));
      }
    }
  }
  return lex;
}

}  // namespace stylochron
