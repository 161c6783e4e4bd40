#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hq {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlphabetMismatch : public Error {
 public:
  AlphabetMismatch() : Error("words belong to different alphabets") {}
};

class SelfReference : public Error {
 public:
  explicit SelfReference(std::string const& glyph)
      : Error("replacement for '" + glyph + "' contains '" + glyph + "'") {}
};

class NotEliminable : public Error {
 public:
  using Error::Error;
};

class TraceInvalid : public Error {
 public:
  TraceInvalid(std::size_t step, std::string const& why)
      : Error("trace step " + std::to_string(step) + ": " + why), step_(step) {}

  [[nodiscard]] std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class OverflowError : public Error {
 public:
  OverflowError() : Error("integer overflow in exact arithmetic") {}
};

/// Raised while tokenizing text against an alphabet. `position` counts
/// grapheme clusters from 0.
class TokenizeError : public Error {
 public:
  TokenizeError(std::size_t position, std::string const& why)
      : Error("at position " + std::to_string(position) + ": " + why),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hq
