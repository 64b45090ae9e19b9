#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace digalph {

enum class ErrorKind {
  InvalidArgument,
  UnsupportedCharacter,
  EmptyWord,
  OrphanDiacritic,
  UnboundRelation,
  Parse,
  Encoding,
  Io,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library derives from this.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by strict normalization. `offset` counts code points from the start of the token.
class UnsupportedCharacterError : public Error {
 public:
  UnsupportedCharacterError(char32_t code_point, std::size_t offset);

  char32_t code_point() const noexcept { return code_point_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  char32_t code_point_;
  std::size_t offset_;
};

// Raised while reading line-oriented inputs; `line` is 1-based.
class LineError : public Error {
 public:
  LineError(ErrorKind kind, std::size_t line, const std::string& detail);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace digalph
