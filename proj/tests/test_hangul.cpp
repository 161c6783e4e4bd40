#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hq/hangul.hpp"
#include "hq/text.hpp"
#include "oracles.hpp"

using namespace hq;
using namespace hq::hangul;

namespace {

Jamo j(std::string_view glyph) { return jamo_from_glyph(glyph); }

char32_t cp(std::string_view s) { return text::code_points(s).at(0); }

std::string decomposed(std::string_view syllable) {
  return join(decompose_syllable(cp(syllable)).flatten());
}

std::vector<Jamo> jamo(std::initializer_list<std::string_view> glyphs) {
  std::vector<Jamo> out;
  for (auto g : glyphs) {
    out.push_back(j(g));
  }
  return out;
}

JamoParseError::Kind parse_error(std::vector<Jamo> const& seq) {
  try {
    parse_jamo(seq);
  } catch (JamoParseError const& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return JamoParseError::Kind::empty;
}

}  // namespace

TEST_CASE("character tables") {
  auto all = all_jamo();
  REQUIRE(all.size() == 40);
  CHECK(all.front().glyph() == "ㄱ");
  CHECK(all[18].glyph() == "ㅎ");
  CHECK(all[19].glyph() == "ㅏ");
  CHECK(all.back().glyph() == "ㅣ");
  for (auto x : all) {
    CHECK(jamo_from_glyph(x.glyph()) == x);
  }
  CHECK_THROWS_AS(jamo_from_glyph("ㄳ"), Error);
  CHECK_THROWS_AS(jamo_from_glyph("a"), Error);
}

TEST_CASE("decompose_syllable") {
  CHECK(decomposed("수") == "ㅅ+ㅜ");
  CHECK(decomposed("밖") == "ㅂ+ㅏ+ㄲ");
  CHECK(decomposed("넓") == "ㄴ+ㅓ+ㄹ+ㅂ");
  CHECK(decomposed("엌") == "ㅇ+ㅓ+ㅋ");
  CHECK(decomposed("과") == "ㄱ+ㅘ");  // compound vowels stay atomic
  CHECK(decomposed("값") == "ㄱ+ㅏ+ㅂ+ㅅ");
  CHECK_THROWS_AS(decompose_syllable(U'a'), NotASyllable);
  CHECK_THROWS_AS(decompose_syllable(0xD7A4), NotASyllable);
}

TEST_CASE("every tail cluster splits in two") {
  std::vector<std::pair<std::string_view, std::string_view>> clusters = {
      {"갃", "ㄱ+ㅅ"}, {"갅", "ㄴ+ㅈ"}, {"갆", "ㄴ+ㅎ"}, {"갉", "ㄹ+ㄱ"},
      {"갊", "ㄹ+ㅁ"}, {"갋", "ㄹ+ㅂ"}, {"갌", "ㄹ+ㅅ"}, {"갍", "ㄹ+ㅌ"},
      {"갎", "ㄹ+ㅍ"}, {"갏", "ㄹ+ㅎ"}, {"값", "ㅂ+ㅅ"}};
  for (auto [syllable, tail] : clusters) {
    CHECK(decomposed(syllable) == "ㄱ+ㅏ+" + std::string(tail));
  }
}

TEST_CASE("decompose_text") {
  CHECK(join(decompose_text("안일")) == "ㅇ+ㅏ+ㄴ+ㅇ+ㅣ+ㄹ");
  CHECK(join(decompose_text("수")) == "ㅅ+ㅜ");
  CHECK(join(decompose_text("부엌")) == "ㅂ+ㅜ+ㅇ+ㅓ+ㅋ");
  CHECK(decompose_text("").empty());
  // Conjoining jamo compose under NFC before decomposition.
  CHECK(join(decompose_text("수")) == "ㅅ+ㅜ");
  CHECK_THROWS_AS(decompose_text("ab"), NotASyllable);
  try {
    decompose_text("수a");
  } catch (NotASyllable const& e) {
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(decompose_text("ㅅㅜ"), NotASyllable);
}

TEST_CASE("compose_syllable") {
  CHECK(compose_syllable({j("ㅅ"), j("ㅜ")}) == cp("수"));
  auto rb = jamo({"ㄹ", "ㅂ"});
  CHECK(compose_syllable({j("ㄴ"), j("ㅓ"), rb}) == cp("넓"));
  auto gs = jamo({"ㄱ", "ㅅ"});
  CHECK(compose_syllable({j("ㄱ"), j("ㅏ"), gs}) == cp("갃"));
  auto gg = jamo({"ㄱ", "ㄱ"});
  CHECK_THROWS_AS(compose_syllable({j("ㄱ"), j("ㅏ"), gg}), InvalidTail);
  auto dd = jamo({"ㄸ"});
  CHECK_THROWS_AS(compose_syllable({j("ㄱ"), j("ㅏ"), dd}), InvalidTail);
  CHECK_THROWS_AS(SyllableDecomposition(j("ㅏ"), j("ㄱ")), Error);
}

TEST_CASE("parse_jamo") {
  auto blocks = parse_jamo(jamo({"ㅇ", "ㅏ", "ㄴ", "ㅇ", "ㅣ", "ㄹ"}));
  CHECK(compose_text(blocks) == "안일");
  CHECK(compose_text(parse_jamo(jamo({"ㅅ", "ㅜ"}))) == "수");
  CHECK(compose_text(parse_jamo(decompose_text("넓다"))) == "넓다");

  using K = JamoParseError::Kind;
  CHECK(parse_error({}) == K::empty);
  CHECK(parse_error(jamo({"ㅜ", "ㅅ"})) == K::starts_with_vowel);
  CHECK(parse_error(jamo({"ㅅ", "ㅜ", "ㅏ"})) == K::vowel_without_lead);
  CHECK(parse_error(jamo({"ㅅ", "ㅜ", "ㄹ", "ㄱ", "ㅅ", "ㄱ", "ㅏ"})) ==
        K::tail_too_long);
  CHECK(parse_error(jamo({"ㅅ", "ㅜ", "ㄹ", "ㄱ", "ㅅ"})) ==
        K::trailing_tail_too_long);
  CHECK(parse_error(jamo({"ㅅ", "ㄱ"})) == K::no_vowel);
  CHECK(parse_error(jamo({"ㅅ", "ㄱ", "ㅏ"})) == K::tail_too_long);
}

TEST_CASE("round trip over every syllable") {
  for (char32_t s = kSyllableFirst; s <= kSyllableLast; ++s) {
    auto d = decompose_syllable(s);
    REQUIRE(compose_syllable(d) == s);
    CHECK(d.tail().size() <= 2);
  }
}

TEST_CASE("property: flattened syllables parse back uniquely") {
  std::mt19937_64 rng(11172);
  std::uniform_int_distribution<char32_t> syllable(kSyllableFirst,
                                                   kSyllableLast);
  std::uniform_int_distribution<std::size_t> length(1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<SyllableDecomposition> original;
    std::vector<Jamo> flat;
    std::string text_form;
    std::size_t expected_length = 0;
    for (std::size_t i = length(rng); i > 0; --i) {
      auto s = syllable(rng);
      text_form += text::encode(s);
      original.push_back(decompose_syllable(s));
      auto f = original.back().flatten();
      expected_length += 2 + original.back().tail().size();
      flat.insert(flat.end(), f.begin(), f.end());
    }
    CHECK(decompose_text(text_form).size() == expected_length);
    REQUIRE(parse_jamo(flat) == original);
    auto all = oracle::segmentations(flat);
    REQUIRE(all.size() == 1);
    CHECK(all.front().size() == original.size());
  }
}
