#include "hq/words.hpp"

#include <algorithm>

#include "hq/error.hpp"
#include "hq/text.hpp"

namespace hq {

namespace {

constexpr std::string_view kDot = "·";
constexpr std::string_view kSuperMinus = "⁻";
constexpr std::string_view kSuperOne = "¹";

AlphabetPtr const& common_alphabet(Word const& u, Word const& v) {
  if (u.alphabet() && v.alphabet() && u.alphabet() != v.alphabet()) {
    if (u.empty()) {
      return v.alphabet();
    }
    if (v.empty()) {
      return u.alphabet();
    }
    throw AlphabetMismatch();
  }
  return u.alphabet() ? u.alphabet() : v.alphabet();
}

}  // namespace

Alphabet::Alphabet(std::string language, std::vector<std::string> const& glyphs)
    : language_(std::move(language)) {
  generators_.reserve(glyphs.size());
  for (auto const& raw : glyphs) {
    auto glyph = text::nfc(raw);
    if (text::graphemes(glyph).size() != 1) {
      throw Error("glyph '" + raw + "' is not a single grapheme cluster");
    }
    auto id = static_cast<GeneratorId>(generators_.size());
    if (!index_.emplace(glyph, id).second) {
      throw Error("duplicate glyph '" + glyph + "' in alphabet");
    }
    generators_.push_back({id, std::move(glyph), language_});
  }
}

std::optional<GeneratorId> Alphabet::find(std::string_view glyph) const {
  auto it = index_.find(std::string(glyph));
  if (it == index_.end()) {
    it = index_.find(text::nfc(glyph));
    if (it == index_.end()) {
      return std::nullopt;
    }
  }
  return it->second;
}

std::vector<std::string> Alphabet::glyphs() const {
  std::vector<std::string> out;
  out.reserve(generators_.size());
  for (auto const& g : generators_) {
    out.push_back(g.glyph);
  }
  return out;
}

AlphabetPtr make_alphabet(std::string language,
                          std::vector<std::string> const& glyphs) {
  return std::make_shared<Alphabet const>(std::move(language), glyphs);
}

Word free_reduce(AlphabetPtr const& alphabet, std::span<Letter const> raw) {
  Word w(alphabet);
  w.letters_.reserve(raw.size());
  for (auto letter : raw) {
    if (!alphabet || letter.generator >= alphabet->size() ||
        (letter.sign != 1 && letter.sign != -1)) {
      throw AlphabetMismatch();
    }
    // Stack-based cancellation reaches the fixpoint in one pass.
    if (!w.letters_.empty() && w.letters_.back().cancels(letter)) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(letter);
    }
  }
  return w;
}

Word free_reduce(std::span<SignedLetter const> raw) {
  if (raw.empty()) {
    return {};
  }
  auto const& alphabet = raw.front().alphabet;
  std::vector<Letter> letters;
  letters.reserve(raw.size());
  for (auto const& s : raw) {
    if (s.alphabet != alphabet) {
      throw AlphabetMismatch();
    }
    letters.push_back(s.letter);
  }
  return free_reduce(alphabet, letters);
}

Word letter_word(AlphabetPtr const& alphabet, GeneratorId g, int sign) {
  Letter l{g, static_cast<std::int8_t>(sign)};
  return free_reduce(alphabet, std::span<Letter const>(&l, 1));
}

Word invert(Word const& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return free_reduce(w.alphabet(), letters);
}

Word concat(Word const& u, Word const& v) {
  auto const& alphabet = common_alphabet(u, v);
  std::vector<Letter> letters(u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  if (letters.empty()) {
    return Word(alphabet);
  }
  return free_reduce(alphabet, letters);
}

CyclicDecomposition cyclic_reduce(Word const& w) {
  auto letters = w.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  auto const& a = w.alphabet();
  return {free_reduce(a, letters.subspan(lo, hi - lo)),
          free_reduce(a, letters.first(lo))};
}

Word substitute(Word const& w, GeneratorId g, Word const& replacement) {
  if (occurrences(replacement, g) != 0) {
    throw SelfReference(w.alphabet() ? (*w.alphabet())[g].glyph
                                     : std::to_string(g));
  }
  auto const& alphabet = common_alphabet(w, replacement);
  auto inverse = invert(replacement);
  std::vector<Letter> letters;
  letters.reserve(w.size() * std::max<std::size_t>(1, replacement.size()));
  for (auto letter : w.letters()) {
    if (letter.generator != g) {
      letters.push_back(letter);
      continue;
    }
    auto const& piece = letter.sign > 0 ? replacement : inverse;
    letters.insert(letters.end(), piece.letters().begin(),
                   piece.letters().end());
  }
  return free_reduce(alphabet, letters);
}

std::size_t occurrences(Word const& w, GeneratorId g) {
  return static_cast<std::size_t>(
      std::count_if(w.letters().begin(), w.letters().end(),
                    [g](Letter l) { return l.generator == g; }));
}

std::int64_t exponent_sum(Word const& w, GeneratorId g) {
  std::int64_t sum = 0;
  for (auto l : w.letters()) {
    if (l.generator == g) {
      sum += l.sign;
    }
  }
  return sum;
}

Word rotate(Word const& w, std::size_t i) {
  auto letters = w.letters();
  if (letters.empty()) {
    return w;
  }
  i %= letters.size();
  std::vector<Letter> rotated(letters.begin() + static_cast<std::ptrdiff_t>(i),
                              letters.end());
  rotated.insert(rotated.end(), letters.begin(),
                 letters.begin() + static_cast<std::ptrdiff_t>(i));
  return free_reduce(w.alphabet(), rotated);
}

std::string to_string(Word const& w, Notation notation) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  bool first = true;
  for (auto l : w.letters()) {
    if (!first) {
      out += kDot;
    }
    first = false;
    out += (*w.alphabet())[l.generator].glyph;
    if (l.sign < 0) {
      out += notation == Notation::ascii ? "^-1" : "⁻¹";
    }
  }
  return out;
}

Word parse_word(AlphabetPtr const& alphabet, std::string_view input) {
  auto clusters = text::graphemes(input);
  std::vector<Letter> letters;
  auto expect = [&](std::size_t& i, std::string_view what) {
    if (i + 1 >= clusters.size() || clusters[i + 1] != what) {
      throw TokenizeError(i, "incomplete inverse marker");
    }
    ++i;
  };
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    auto const& c = clusters[i];
    if (c == " " || c == "\t" || c == "\n" || c == kDot) {
      continue;
    }
    if (auto id = alphabet->find(c)) {
      letters.push_back({*id, 1});
      continue;
    }
    if (c == "^" || c == kSuperMinus) {
      if (letters.empty()) {
        throw TokenizeError(i, "inverse marker without a preceding letter");
      }
      if (c == "^") {
        expect(i, "-");
        expect(i, "1");
      } else {
        expect(i, kSuperOne);
      }
      if (letters.back().sign < 0) {
        throw TokenizeError(i, "letter inverted twice");
      }
      letters.back().sign = -1;
      continue;
    }
    if (c == "1") {
      continue;
    }
    throw TokenizeError(i, "unknown glyph '" + c + "'");
  }
  return free_reduce(alphabet, letters);
}

}  // namespace hq
