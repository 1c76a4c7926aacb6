#include "stylochron/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "stylochron/utf8.hpp"

namespace stylochron {

namespace {

constexpr std::string_view kBom = "\xEF\xBB\xBF";

// Minimal RFC 4180-style CSV: quoted fields may contain commas and doubled
// quotes. No embedded newlines.
std::vector<std::string> split_csv_row(const std::string& line, std::size_t lineno) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (quoted) {
    throw SchemaError("manifest line " + std::to_string(lineno) + ": unterminated quote");
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string normalize_newlines(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char c = raw[i];
    if (c == '\r') {
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
      out.push_back('\n');
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// A speaker label line: uppercase letters, spaces, apostrophes and periods
// only, at least one letter, at most 40 chars, ending in a period.
bool is_speaker_label(std::string_view line) {
  if (line.empty() || line.size() > 40 || line.back() != '.') return false;
  bool has_letter = false;
  for (char c : line) {
    if (c >= 'A' && c <= 'Z') {
      has_letter = true;
    } else if (c != ' ' && c != '\'' && c != '.') {
      return false;
    }
  }
  return has_letter;
}

std::string strip_speaker_labels(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const bool last = eol == std::string::npos;
    const std::string_view line(text.data() + pos, (last ? text.size() : eol) - pos);
    if (!is_speaker_label(line)) {
      out.append(line);
      if (!last) out.push_back('\n');
    }
    if (last) break;
    pos = eol + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto is_ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  };
  std::size_t b = 0, e = s.size();
  while (b < e && is_ws(s[b])) ++b;
  while (e > b && is_ws(s[e - 1])) --e;
  return s.substr(b, e - b);
}

int parse_year(const std::string& field, std::size_t lineno) {
  const std::string s{trim(field)};
  if (s.empty()) throw ValueError("manifest line " + std::to_string(lineno) + ": empty year");
  std::size_t used = 0;
  int year = 0;
  try {
    year = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ValueError("manifest line " + std::to_string(lineno) + ": unparsable year '" + s + "'");
  }
  if (used != s.size()) {
    throw ValueError("manifest line " + std::to_string(lineno) + ": unparsable year '" + s + "'");
  }
  if (year < 1000 || year > 2999) {
    throw ValueError("manifest line " + std::to_string(lineno) + ": year " +
                     std::to_string(year) + " outside [1000, 2999]");
  }
  return year;
}

}  // namespace

const char* genre_name(Genre g) {
  switch (g) {
    case Genre::comedy: return "comedy";
    case Genre::tragedy: return "tragedy";
    case Genre::history: return "history";
    case Genre::other: return "other";
    case Genre::unknown: return "unknown";
  }
  return "unknown";
}

Genre genre_from_name(std::string_view name) {
  const std::string_view s = trim(name);
  if (s.empty() || s == "unknown") return Genre::unknown;
  if (s == "comedy") return Genre::comedy;
  if (s == "tragedy") return Genre::tragedy;
  if (s == "history") return Genre::history;
  if (s == "other") return Genre::other;
  throw ValueError("unknown genre '" + std::string(s) + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFile("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed: " + path.string());
  return std::move(buf).str();
}

Manifest load_manifest(const std::filesystem::path& path,
                       std::vector<std::string>* warnings) {
  std::string raw = read_file(path);
  if (raw.starts_with(kBom)) raw.erase(0, kBom.size());
  std::istringstream in(raw);

  Manifest manifest;
  manifest.source_path = path.string();
  const auto base = path.parent_path();

  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) {
    throw SchemaError("manifest " + path.string() + ": missing header row");
  }
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    const auto header = split_csv_row(line, lineno);
    const std::vector<std::string> expected = {"id", "title", "path", "year", "genre"};
    if (header != expected) {
      throw SchemaError("manifest " + path.string() +
                        ": header must be exactly 'id,title,path,year,genre'");
    }
  }

  std::unordered_set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_csv_row(line, lineno);
    if (fields.size() != 5) {
      throw SchemaError("manifest line " + std::to_string(lineno) + ": expected 5 fields, got " +
                        std::to_string(fields.size()));
    }
    PlayRecord rec;
    rec.id = std::string(trim(fields[0]));
    if (rec.id.empty()) {
      throw SchemaError("manifest line " + std::to_string(lineno) + ": empty id");
    }
    if (!seen_ids.insert(rec.id).second) {
      throw DuplicateId("manifest line " + std::to_string(lineno) + ": duplicate id '" +
                        rec.id + "'");
    }
    rec.title = fields[1];
    std::filesystem::path p{std::string(trim(fields[2]))};
    rec.path = p.is_absolute() ? p : base / p;
    rec.year = parse_year(fields[3], lineno);
    if ((rec.year < 1580 || rec.year > 1620) && warnings) {
      warnings->push_back("manifest: id '" + rec.id + "' year " + std::to_string(rec.year) +
                          " outside the Shakespeare-era range [1580, 1620]");
    }
    rec.genre = genre_from_name(fields[4]);
    if (!std::filesystem::exists(rec.path)) {
      throw MissingFile("manifest: id '" + rec.id + "' references missing file " +
                        rec.path.string());
    }
    manifest.entries.push_back(std::move(rec));
  }
  return manifest;
}

CleanDocument clean_text(std::string_view raw, const CleaningRules& rules, std::string id) {
  std::string_view body = raw;
  if (body.starts_with(kBom)) body.remove_prefix(kBom.size());
  if (!utf8::valid(body)) {
    throw EncodingError("document '" + id + "' is not valid UTF-8");
  }
  std::string text = normalize_newlines(body);

  bool cut = false;
  std::size_t begin = 0, end = text.size();
  if (rules.start_marker && !rules.start_marker->empty()) {
    const auto pos = text.find(*rules.start_marker);
    if (pos != std::string::npos) {
      begin = pos + rules.start_marker->size();
      cut = true;
    }
  }
  if (rules.end_marker && !rules.end_marker->empty()) {
    const auto pos = text.rfind(*rules.end_marker);
    if (pos != std::string::npos) {
      end = pos;
      cut = true;
    }
  }
  if (begin > end) {
    throw MarkerOrderError("document '" + id + "': start marker occurs after end marker");
  }
  if (cut) {
    text = std::string(trim(std::string_view(text).substr(begin, end - begin)));
  }

  if (rules.speaker_labels == SpeakerLabelPolicy::strip) {
    text = strip_speaker_labels(text);
  }

  CleanDocument doc;
  doc.id = std::move(id);
  doc.char_count = utf8::count_codepoints(text);
  doc.line_count = std::count(text.begin(), text.end(), '\n') +
                   ((!text.empty() && text.back() != '\n') ? 1 : 0);
  doc.text = std::move(text);
  return doc;
}

std::vector<std::pair<PlayRecord, CleanDocument>> load_corpus(
    const Manifest& manifest, const CleaningRules& rules,
    std::vector<std::string>* warnings) {
  (void)warnings;
  std::vector<std::pair<PlayRecord, CleanDocument>> out;
  out.reserve(manifest.entries.size());
  for (const PlayRecord& rec : manifest.entries) {
    std::string raw = read_file(rec.path);
    out.emplace_back(rec, clean_text(raw, rules, rec.id));
  }
  return out;
}

}  // namespace stylochron
