#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hq {

using GeneratorId = std::uint32_t;

struct Generator {
  GeneratorId id = 0;
  std::string glyph;  // one grapheme cluster, NFC
  std::string language;

  friend bool operator==(Generator const&, Generator const&) = default;
};

// An ordered generating set. Generator ids are positions. Alphabets are
// shared immutably between words and presentations; word operations compare
// alphabets by identity.
class Alphabet {
 public:
  // Throws hq::Error on duplicate or multi-cluster glyphs.
  Alphabet(std::string language, std::vector<std::string> const& glyphs);

  [[nodiscard]] std::string const& language() const noexcept {
    return language_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return generators_.size(); }
  [[nodiscard]] Generator const& operator[](GeneratorId id) const {
    return generators_.at(id);
  }
  [[nodiscard]] std::span<Generator const> generators() const noexcept {
    return generators_;
  }
  // Glyph is NFC-normalized before lookup.
  [[nodiscard]] std::optional<GeneratorId> find(std::string_view glyph) const;
  [[nodiscard]] std::vector<std::string> glyphs() const;

 private:
  std::string language_;
  std::vector<Generator> generators_;
  std::unordered_map<std::string, GeneratorId> index_;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

AlphabetPtr make_alphabet(std::string language,
                          std::vector<std::string> const& glyphs);

struct Letter {
  GeneratorId generator = 0;
  std::int8_t sign = 1;  // +1 or -1

  [[nodiscard]] constexpr Letter inverse() const noexcept {
    return {generator, static_cast<std::int8_t>(-sign)};
  }
  [[nodiscard]] constexpr bool cancels(Letter other) const noexcept {
    return generator == other.generator && sign == -other.sign;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;
};

// A letter that carries its alphabet; the input to free_reduce when the
// letters may come from several sources.
struct SignedLetter {
  AlphabetPtr alphabet;
  Letter letter;
};

// A freely reduced word. The empty word is the identity; an empty word may
// have no alphabet, in which case it is compatible with every alphabet.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  [[nodiscard]] AlphabetPtr const& alphabet() const noexcept {
    return alphabet_;
  }
  [[nodiscard]] std::span<Letter const> letters() const noexcept {
    return letters_;
  }
  [[nodiscard]] std::size_t size() const noexcept { return letters_.size(); }
  [[nodiscard]] bool empty() const noexcept { return letters_.empty(); }
  [[nodiscard]] Letter front() const { return letters_.front(); }
  [[nodiscard]] Letter back() const { return letters_.back(); }

  friend bool operator==(Word const& a, Word const& b) {
    return a.letters_ == b.letters_ &&
           (a.letters_.empty() || a.alphabet_ == b.alphabet_);
  }

 private:
  friend Word free_reduce(AlphabetPtr const&, std::span<Letter const>);

  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

// Throws AlphabetMismatch if a letter's generator is outside the alphabet.
Word free_reduce(AlphabetPtr const& alphabet, std::span<Letter const> raw);

// Throws AlphabetMismatch unless all letters share one alphabet.
Word free_reduce(std::span<SignedLetter const> raw);

Word letter_word(AlphabetPtr const& alphabet, GeneratorId g, int sign = 1);

Word invert(Word const& w);

Word concat(Word const& u, Word const& v);

struct CyclicDecomposition {
  Word core;
  Word conjugator;
};

// w = conjugator · core · conjugator⁻¹ with core cyclically reduced.
CyclicDecomposition cyclic_reduce(Word const& w);

// Throws SelfReference if the replacement mentions g.
Word substitute(Word const& w, GeneratorId g, Word const& replacement);

std::size_t occurrences(Word const& w, GeneratorId g);

// Signed exponent sum of g in w.
std::int64_t exponent_sum(Word const& w, GeneratorId g);

// Rotation i of a cyclically reduced word: letters [i, n) followed by [0, i).
Word rotate(Word const& w, std::size_t i);

enum class Notation { unicode, ascii };

// Glyphs joined by "·"; inverses marked "⁻¹" (unicode) or "^-1" (ascii);
// the empty word is "1".
std::string to_string(Word const& w, Notation notation = Notation::unicode);

// Parses words such as "w a w^-1", "w·a·w⁻¹" or "waw⁻¹". Whitespace and "·"
// separate letters; "1" alone is the empty word. Throws TokenizeError.
Word parse_word(AlphabetPtr const& alphabet, std::string_view text);

}  // namespace hq
