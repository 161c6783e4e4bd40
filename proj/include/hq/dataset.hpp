#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hq/error.hpp"
#include "hq/presentation.hpp"
#include "hq/words.hpp"

namespace hq {

struct RelationRecord {
  RelationKind kind = RelationKind::word_pair;
  std::string lhs;
  std::string rhs;
  std::string gloss;
  std::string ref;

  friend bool operator==(RelationRecord const&,
                         RelationRecord const&) = default;
};

struct LanguageDataset {
  std::string language;
  std::vector<std::string> alphabet;
  std::vector<RelationRecord> records;

  friend bool operator==(LanguageDataset const&,
                         LanguageDataset const&) = default;
};

// Malformed input. `line` is 1-based, 0 when not tied to a line.
class DatasetError : public Error {
 public:
  DatasetError(std::size_t line, std::string const& why);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownGlyph : public DatasetError {
 public:
  UnknownGlyph(std::size_t line, std::string glyph);
  [[nodiscard]] std::string const& glyph() const noexcept { return glyph_; }

 private:
  std::string glyph_;
};

// Text format:
//   @language <tag>
//   @alphabet <glyph> <glyph> ...     (repeatable; concatenated)
//   # comment
//   <kind>\t<lhs>\t<rhs>\t<gloss>\t<ref>   kind = word | raw
LanguageDataset parse_dataset(std::string_view content);
LanguageDataset load_dataset(std::filesystem::path const& path);

std::string serialize_dataset(LanguageDataset const& d);
void save_dataset(LanguageDataset const& d, std::filesystem::path const& path);

// Korean word sides go through the Hangul decomposer; every other language
// is split into grapheme clusters. Raw sides are "+"-separated glyphs.
Word tokenize_side(AlphabetPtr const& alphabet, RelationKind kind,
                   std::string_view side);

// Validates every record. Throws DatasetError / UnknownGlyph; `line` is then
// the 1-based record number.
void validate(LanguageDataset const& d);

Relation to_relation(AlphabetPtr const& alphabet, RelationRecord const& rec);

// Vacuous relators are dropped.
Presentation to_presentation(LanguageDataset const& d);

inline constexpr std::string_view kKoreanTag = "ko";

}  // namespace hq
