#include "hq/text.hpp"

#include <memory>

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "hq/error.hpp"

namespace hq::text {

std::string nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  auto const* normalizer = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error("ICU NFC normalizer unavailable");
  }
  auto src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  auto out = normalizer->normalize(src, status);
  if (U_FAILURE(status)) {
    throw Error("NFC normalization failed");
  }
  std::string result;
  out.toUTF8String(result);
  return result;
}

std::vector<std::string> graphemes(std::string_view utf8) {
  auto normalized = nfc(utf8);
  auto ustr = icu::UnicodeString::fromUTF8(normalized);
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::BreakIterator> it(
      icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(),
                                                  status));
  if (U_FAILURE(status)) {
    throw Error("ICU grapheme iterator unavailable");
  }
  it->setText(ustr);
  std::vector<std::string> clusters;
  int32_t start = it->first();
  for (int32_t end = it->next(); end != icu::BreakIterator::DONE;
       start = end, end = it->next()) {
    std::string cluster;
    ustr.tempSubStringBetween(start, end).toUTF8String(cluster);
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

std::vector<char32_t> code_points(std::string_view utf8) {
  std::vector<char32_t> out;
  auto const* s = reinterpret_cast<uint8_t const*>(utf8.data());
  auto const length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      throw Error("malformed UTF-8 at byte " + std::to_string(i));
    }
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string encode(char32_t cp) {
  std::string out;
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    throw Error("cannot encode code point " + std::to_string(cp));
  }
  out.assign(reinterpret_cast<char const*>(buf), static_cast<size_t>(n));
  return out;
}

bool is_ascii(std::string_view s) {
  for (unsigned char c : s) {
    if (c >= 0x80) {
      return false;
    }
  }
  return true;
}

}  // namespace hq::text
