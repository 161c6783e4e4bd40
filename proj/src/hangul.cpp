#include "hq/hangul.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

#include "hq/text.hpp"

namespace hq::hangul {

namespace {

// Compatibility jamo for the consonants, in lead order.
constexpr std::array<char32_t, kLeadCount> kConsonantCodes = {
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141,
    0x3142, 0x3143, 0x3145, 0x3146, 0x3147, 0x3148, 0x3149,
    0x314A, 0x314B, 0x314C, 0x314D, 0x314E};
constexpr char32_t kFirstVowelCode = 0x314F;  // ㅏ

struct TailEntry {
  std::uint8_t size;
  std::array<std::uint8_t, 2> consonants;
};

// Tail index 1..27 → consonants in lead order. Index 0 means no tail.
constexpr std::array<TailEntry, kTailCount> kTails = {{
    {0, {0, 0}},
    {1, {0, 0}},    // ㄱ
    {1, {1, 0}},    // ㄲ
    {2, {0, 9}},    // ㄳ
    {1, {2, 0}},    // ㄴ
    {2, {2, 12}},   // ㄵ
    {2, {2, 18}},   // ㄶ
    {1, {3, 0}},    // ㄷ
    {1, {5, 0}},    // ㄹ
    {2, {5, 0}},    // ㄺ
    {2, {5, 6}},    // ㄻ
    {2, {5, 7}},    // ㄼ
    {2, {5, 9}},    // ㄽ
    {2, {5, 16}},   // ㄾ
    {2, {5, 17}},   // ㄿ
    {2, {5, 18}},   // ㅀ
    {1, {6, 0}},    // ㅁ
    {1, {7, 0}},    // ㅂ
    {2, {7, 9}},    // ㅄ
    {1, {9, 0}},    // ㅅ
    {1, {10, 0}},   // ㅆ
    {1, {11, 0}},   // ㅇ
    {1, {12, 0}},   // ㅈ
    {1, {14, 0}},   // ㅊ
    {1, {15, 0}},   // ㅋ
    {1, {16, 0}},   // ㅌ
    {1, {17, 0}},   // ㅍ
    {1, {18, 0}},   // ㅎ
}};

std::optional<std::size_t> tail_index(std::span<Jamo const> tail) {
  if (tail.empty()) {
    return 0;
  }
  for (std::size_t i = 1; i < kTails.size(); ++i) {
    auto const& e = kTails[i];
    if (e.size != tail.size()) {
      continue;
    }
    bool match = true;
    for (std::size_t k = 0; k < e.size; ++k) {
      match = match && tail[k].index() == e.consonants[k];
    }
    if (match) {
      return i;
    }
  }
  return std::nullopt;
}

std::string code_point_label(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

char const* parse_error_text(JamoParseError::Kind kind) {
  switch (kind) {
    case JamoParseError::Kind::empty:
      return "empty character sequence";
    case JamoParseError::Kind::starts_with_vowel:
      return "sequence must start with a consonant";
    case JamoParseError::Kind::vowel_without_lead:
      return "vowel has no preceding consonant";
    case JamoParseError::Kind::tail_too_long:
      return "consonant run too long: tail would exceed two consonants";
    case JamoParseError::Kind::trailing_tail_too_long:
      return "more than two trailing consonants";
    case JamoParseError::Kind::no_vowel:
      return "sequence ends before any vowel";
  }
  return "parse error";
}

}  // namespace

char32_t Jamo::code_point() const {
  return is_consonant() ? kConsonantCodes.at(index_)
                        : kFirstVowelCode + index_;
}

std::string Jamo::glyph() const { return text::encode(code_point()); }

Jamo jamo_from_code_point(char32_t cp) {
  auto it = std::find(kConsonantCodes.begin(), kConsonantCodes.end(), cp);
  if (it != kConsonantCodes.end()) {
    return Jamo::consonant(
        static_cast<std::uint8_t>(it - kConsonantCodes.begin()));
  }
  if (cp >= kFirstVowelCode && cp < kFirstVowelCode + kVowelCount) {
    return Jamo::vowel(static_cast<std::uint8_t>(cp - kFirstVowelCode));
  }
  throw Error(code_point_label(cp) + " is not a Hangul consonant or vowel");
}

Jamo jamo_from_glyph(std::string_view glyph) {
  auto cps = text::code_points(text::nfc(glyph));
  if (cps.size() != 1) {
    throw Error("'" + std::string(glyph) + "' is not a single character");
  }
  return jamo_from_code_point(cps.front());
}

std::vector<Jamo> all_jamo() {
  std::vector<Jamo> out;
  for (std::uint8_t i = 0; i < kLeadCount; ++i) {
    out.push_back(Jamo::consonant(i));
  }
  for (std::uint8_t i = 0; i < kVowelCount; ++i) {
    out.push_back(Jamo::vowel(i));
  }
  return out;
}

SyllableDecomposition::SyllableDecomposition(Jamo lead, Jamo vowel,
                                             std::span<Jamo const> tail)
    : lead_(lead), vowel_(vowel), tail_size_(tail.size()) {
  if (!lead.is_consonant() || !vowel.is_vowel()) {
    throw Error("a syllable is a consonant followed by a vowel");
  }
  if (tail.size() > 2) {
    throw InvalidTail("a tail has at most two consonants");
  }
  for (std::size_t i = 0; i < tail.size(); ++i) {
    if (!tail[i].is_consonant()) {
      throw InvalidTail("tail characters must be consonants");
    }
    tail_[i] = tail[i];
  }
}

std::vector<Jamo> SyllableDecomposition::flatten() const {
  std::vector<Jamo> out{lead_, vowel_};
  auto t = tail();
  out.insert(out.end(), t.begin(), t.end());
  return out;
}

bool operator==(SyllableDecomposition const& a,
                SyllableDecomposition const& b) {
  return a.lead_ == b.lead_ && a.vowel_ == b.vowel_ &&
         std::ranges::equal(a.tail(), b.tail());
}

NotASyllable::NotASyllable(char32_t cp, std::size_t position)
    : Error("position " + std::to_string(position) + ": " +
            code_point_label(cp) + " is not a precomposed Hangul syllable"),
      position_(position) {}

JamoParseError::JamoParseError(Kind kind, std::size_t position)
    : Error("position " + std::to_string(position) + ": " +
            parse_error_text(kind)),
      kind_(kind),
      position_(position) {}

bool is_syllable(char32_t cp) noexcept {
  return cp >= kSyllableFirst && cp <= kSyllableLast;
}

SyllableDecomposition decompose_syllable(char32_t syllable) {
  if (!is_syllable(syllable)) {
    throw NotASyllable(syllable, 0);
  }
  auto const index = static_cast<std::size_t>(syllable - kSyllableFirst);
  auto const lead = index / (kVowelCount * kTailCount);
  auto const vowel = (index / kTailCount) % kVowelCount;
  auto const& t = kTails[index % kTailCount];
  std::array<Jamo, 2> tail{Jamo::consonant(t.consonants[0]),
                           Jamo::consonant(t.consonants[1])};
  return {Jamo::consonant(static_cast<std::uint8_t>(lead)),
          Jamo::vowel(static_cast<std::uint8_t>(vowel)),
          std::span<Jamo const>(tail.data(), t.size)};
}

char32_t compose_syllable(SyllableDecomposition const& d) {
  auto tail = tail_index(d.tail());
  if (!tail) {
    throw InvalidTail("'" + join(d.tail()) +
                      "' is not a syllable-final consonant or cluster");
  }
  return kSyllableFirst +
         static_cast<char32_t>(
             (d.lead().index() * kVowelCount + d.vowel().index()) * kTailCount +
             *tail);
}

std::vector<Jamo> decompose_text(std::string_view utf8) {
  std::vector<Jamo> out;
  auto cps = text::code_points(text::nfc(utf8));
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (!is_syllable(cps[i])) {
      throw NotASyllable(cps[i], i);
    }
    auto flat = decompose_syllable(cps[i]).flatten();
    out.insert(out.end(), flat.begin(), flat.end());
  }
  return out;
}

std::vector<SyllableDecomposition> parse_jamo(std::span<Jamo const> seq) {
  using Kind = JamoParseError::Kind;
  if (seq.empty()) {
    throw JamoParseError(Kind::empty, 0);
  }
  if (seq.front().is_vowel()) {
    throw JamoParseError(Kind::starts_with_vowel, 0);
  }

  std::vector<SyllableDecomposition> blocks;
  std::size_t run_start = 0;  // first consonant of the current run
  std::optional<std::size_t> open_vowel;  // vowel of the unfinished block
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i].is_consonant()) {
      continue;
    }
    if (i == run_start) {
      throw JamoParseError(Kind::vowel_without_lead, i);
    }
    // seq[run_start, i) is a consonant run; its last element leads block i.
    auto const lead = i - 1;
    if (open_vowel) {
      if (lead - run_start > 2) {
        throw JamoParseError(Kind::tail_too_long, run_start + 2);
      }
      blocks.emplace_back(seq[*open_vowel - 1], seq[*open_vowel],
                          seq.subspan(run_start, lead - run_start));
    } else if (lead != run_start) {
      // More than one consonant before the first vowel.
      throw JamoParseError(Kind::tail_too_long, run_start + 1);
    }
    open_vowel = i;
    run_start = i + 1;
  }
  if (!open_vowel) {
    throw JamoParseError(Kind::no_vowel, seq.size());
  }
  if (seq.size() - run_start > 2) {
    throw JamoParseError(Kind::trailing_tail_too_long, run_start + 2);
  }
  blocks.emplace_back(seq[*open_vowel - 1], seq[*open_vowel],
                      seq.subspan(run_start));
  return blocks;
}

std::string join(std::span<Jamo const> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) {
      out += '+';
    }
    out += seq[i].glyph();
  }
  return out;
}

std::string compose_text(std::span<SyllableDecomposition const> blocks) {
  std::string out;
  for (auto const& b : blocks) {
    out += text::encode(compose_syllable(b));
  }
  return out;
}

}  // namespace hq::hangul
