#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hq/error.hpp"

// Hangul syllable <-> character-set codec. Characters are Hangul
// Compatibility Jamo: 19 consonants and 21 vowels. Compound vowels are
// atomic; compound tail clusters split into two consonants.
namespace hq::hangul {

inline constexpr char32_t kSyllableFirst = 0xAC00;
inline constexpr char32_t kSyllableLast = 0xD7A3;
inline constexpr std::size_t kLeadCount = 19;
inline constexpr std::size_t kVowelCount = 21;
inline constexpr std::size_t kTailCount = 28;  // including "no tail"

// One consonant or vowel character.
class Jamo {
 public:
  enum class Kind : std::uint8_t { consonant, vowel };

  static constexpr Jamo consonant(std::uint8_t index) {
    return Jamo(Kind::consonant, index);
  }
  static constexpr Jamo vowel(std::uint8_t index) {
    return Jamo(Kind::vowel, index);
  }

  [[nodiscard]] constexpr Kind kind() const noexcept { return kind_; }
  [[nodiscard]] constexpr bool is_consonant() const noexcept {
    return kind_ == Kind::consonant;
  }
  [[nodiscard]] constexpr bool is_vowel() const noexcept {
    return kind_ == Kind::vowel;
  }
  // Position in lead-consonant order (ㄱㄲㄴㄷㄸㄹㅁㅂㅃㅅㅆㅇㅈㅉㅊㅋㅌㅍㅎ) or
  // vowel order (ㅏ … ㅣ).
  [[nodiscard]] constexpr std::uint8_t index() const noexcept { return index_; }

  [[nodiscard]] char32_t code_point() const;
  [[nodiscard]] std::string glyph() const;

  friend constexpr bool operator==(Jamo, Jamo) = default;

 private:
  constexpr Jamo(Kind kind, std::uint8_t index) : kind_(kind), index_(index) {}

  Kind kind_;
  std::uint8_t index_;
};

// Throws hq::Error for anything that is not one of the 40 characters.
Jamo jamo_from_code_point(char32_t cp);
Jamo jamo_from_glyph(std::string_view glyph);

// All 19 consonants then all 21 vowels.
std::vector<Jamo> all_jamo();

// c+v, c+v+c or c+v+c+c.
class SyllableDecomposition {
 public:
  SyllableDecomposition(Jamo lead, Jamo vowel, std::span<Jamo const> tail = {});

  [[nodiscard]] Jamo lead() const noexcept { return lead_; }
  [[nodiscard]] Jamo vowel() const noexcept { return vowel_; }
  [[nodiscard]] std::span<Jamo const> tail() const noexcept {
    return {tail_.data(), tail_size_};
  }
  [[nodiscard]] std::vector<Jamo> flatten() const;

  friend bool operator==(SyllableDecomposition const& a,
                         SyllableDecomposition const& b);

 private:
  Jamo lead_;
  Jamo vowel_;
  std::array<Jamo, 2> tail_{Jamo::consonant(0), Jamo::consonant(0)};
  std::size_t tail_size_ = 0;
};

class NotASyllable : public Error {
 public:
  NotASyllable(char32_t cp, std::size_t position);
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidTail : public Error {
 public:
  using Error::Error;
};

class JamoParseError : public Error {
 public:
  enum class Kind {
    empty,
    starts_with_vowel,
    vowel_without_lead,
    tail_too_long,
    trailing_tail_too_long,
    no_vowel,
  };
  JamoParseError(Kind kind, std::size_t position);
  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

bool is_syllable(char32_t cp) noexcept;

SyllableDecomposition decompose_syllable(char32_t syllable);

// Throws InvalidTail if the tail cannot be written as one syllable-final
// letter (ㄸ, ㅃ, ㅉ alone, or a pair that is not one of the 11 clusters).
char32_t compose_syllable(SyllableDecomposition const& d);

// Per-syllable decompositions concatenated. Only precomposed syllables are
// accepted; NotASyllable carries the code-point position.
std::vector<Jamo> decompose_text(std::string_view utf8);

// The unique segmentation of a character sequence into c+v, c+v+c and
// c+v+c+c blocks: the last consonant before each vowel is that block's lead,
// the rest of the run is the previous block's tail.
std::vector<SyllableDecomposition> parse_jamo(std::span<Jamo const> seq);

// Joins glyphs with "+".
std::string join(std::span<Jamo const> seq);

std::string compose_text(std::span<SyllableDecomposition const> blocks);

}  // namespace hq::hangul
