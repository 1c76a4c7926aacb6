#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylochron/errors.hpp"

namespace stylochron {

enum class Genre { comedy, tragedy, history, other, unknown };

const char* genre_name(Genre g);
Genre genre_from_name(std::string_view name);  // empty -> unknown; throws ValueError

struct PlayRecord {
  std::string id;
  std::string title;
  std::filesystem::path path;  // resolved relative to the manifest location
  int year = 0;
  Genre genre = Genre::unknown;
};

struct Manifest {
  std::vector<PlayRecord> entries;
  std::string source_path;
};

struct CleanDocument {
  std::string id;
  std::string text;  // UTF-8, LF line endings, no BOM
  std::size_t char_count = 0;  // codepoints
  std::size_t line_count = 0;
};

enum class SpeakerLabelPolicy { keep, strip };

struct CleaningRules {
  std::optional<std::string> start_marker;
  std::optional<std::string> end_marker;
  SpeakerLabelPolicy speaker_labels = SpeakerLabelPolicy::keep;
};

/// Parse a manifest CSV (header: id,title,path,year,genre). Row order is
/// preserved; referenced files must exist. Years outside [1580, 1620] add a
/// warning, years outside [1000, 2999] are rejected.
Manifest load_manifest(const std::filesystem::path& path,
                       std::vector<std::string>* warnings = nullptr);

/// Normalize line endings, strip the BOM, cut configured header/footer
/// markers and optionally remove speaker-label lines.
CleanDocument clean_text(std::string_view raw, const CleaningRules& rules,
                         std::string id = {});

/// Read and clean every manifest entry, in manifest order.
std::vector<std::pair<PlayRecord, CleanDocument>> load_corpus(
    const Manifest& manifest, const CleaningRules& rules,
    std::vector<std::string>* warnings = nullptr);

/// Read a whole file as bytes. Throws MissingFile / IoError.
std::string read_file(const std::filesystem::path& path);

}  // namespace stylochron
