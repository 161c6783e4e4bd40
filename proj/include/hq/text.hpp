#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Thin UTF-8 helpers over ICU.
namespace hq::text {

/// Canonical composition (NFC).
std::string nfc(std::string_view utf8);

/// Splits NFC-normalized text into extended grapheme clusters.
std::vector<std::string> graphemes(std::string_view utf8);

/// Decodes UTF-8 into code points; throws hq::Error on malformed input.
std::vector<char32_t> code_points(std::string_view utf8);

std::string encode(char32_t cp);

bool is_ascii(std::string_view s);

}  // namespace hq::text
