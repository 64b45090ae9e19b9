#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "digalph/comm_code.hpp"

namespace digalph {

// The 32 symbols in abjadi order: 28 consonants, then the four diacritics.
enum class LetterId : std::uint8_t {
  Alif, Ba, Jim, Dal, Ha, Waw, Zayn, Hha,
  Tta, Ya, Kaf, Lam, Mim, Nun, Sin, Ayn,
  Fa, Sad, Qaf, Ra, Shin, Ta, Tha, Kha,
  Dhal, Dad, Zza, Ghayn, Dammah, Fathah, Kasrah, Sukun,
};

inline constexpr int kLetterCount = 32;
inline constexpr int kConsonantCount = 28;

enum class LetterKind { Consonant, Diacritic };

struct Letter {
  LetterId id;
  int ordinal;               // 1..32
  LetterKind kind;
  std::string_view slug;     // ASCII identifier used in JSON and on the command line
  std::string_view name;     // romanized name, e.g. "ʼalif"
  char32_t glyph;            // canonical code point; diacritics are combining marks
  std::string_view display;  // table form, e.g. "هـ" for hāʼ
  std::span<const char32_t> variants;  // further code points that read as this letter
  CommCode code;

  bool is_diacritic() const { return kind == LetterKind::Diacritic; }
  // Canonical glyph as UTF-8.
  std::string glyph_utf8() const;
};

// All letters, indexed by ordinal - 1.
std::span<const Letter> letters();
const Letter& letter(LetterId id);

CommCode code_of(LetterId id);
LetterId letter_of(CommCode code);
// Position of `code` in the descending enumeration of five-bit states (1..32).
int ordinal(CommCode code);

std::optional<LetterId> letter_from_code_point(char32_t cp);
std::optional<LetterId> letter_from_slug(std::string_view slug);

// One row per letter: ordinal, name, glyph, code_binary, code_decimal. Header line first.
std::string alphabet_tsv();

}  // namespace digalph
