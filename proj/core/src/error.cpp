#include "digalph/error.hpp"

#include "digalph/utf8.hpp"

namespace digalph {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::UnsupportedCharacter: return "unsupported-character";
    case ErrorKind::EmptyWord: return "empty-word";
    case ErrorKind::OrphanDiacritic: return "orphan-diacritic";
    case ErrorKind::UnboundRelation: return "unbound-relation";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Encoding: return "encoding";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

UnsupportedCharacterError::UnsupportedCharacterError(char32_t code_point, std::size_t offset)
    : Error(ErrorKind::UnsupportedCharacter,
            "unsupported character " + utf8::code_point_label(code_point) + " at offset " +
                std::to_string(offset)),
      code_point_(code_point),
      offset_(offset) {}

LineError::LineError(ErrorKind kind, std::size_t line, const std::string& detail)
    : Error(kind, "line " + std::to_string(line) + ": " + detail), line_(line) {}

}  // namespace digalph
