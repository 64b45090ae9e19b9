#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digalph/alphabet.hpp"

namespace digalph {

enum class Mode { Strict, Lenient };

std::string_view to_string(Mode mode);
std::optional<Mode> mode_from_string(std::string_view text);

struct NormalizeOptions {
  Mode mode = Mode::Lenient;
  bool expand_shadda = false;
};

enum class NoteKind {
  Composed,            // decomposed sequence folded to its precomposed letter
  TatweelRemoved,
  LigatureDecomposed,  // lam-alef presentation form split into ل + ا
  MaqsuraMapped,       // ى -> ا
  HamzaMapped,         // hamza or hamza carrier -> ا
  MaddaExpanded,       // آ -> ا ا
  ShaddaDropped,
  ShaddaExpanded,
  TaMarbutaMapped,     // ة -> ت
  Dropped,             // lenient mode only: character outside the inventory
};

std::string_view to_string(NoteKind kind);

struct NormalizationNote {
  NoteKind kind;
  std::size_t offset;  // code point index in the input token
  char32_t code_point;

  friend bool operator==(const NormalizationNote&, const NormalizationNote&) = default;
};

struct Unit {
  LetterId letter;                   // always a consonant
  std::optional<LetterId> diacritic;  // always a diacritic when set

  friend bool operator==(const Unit&, const Unit&) = default;
};

struct NormalizedWord {
  std::vector<Unit> units;  // writing order, never empty
  std::vector<NormalizationNote> notes;

  // Canonical glyphs with attached marks, e.g. "رِ".
  std::string to_string() const;
  bool has_note(NoteKind kind) const;
};

// Throws UnsupportedCharacterError (strict mode) or Error(EmptyWord).
NormalizedWord normalize(std::string_view text, const NormalizeOptions& options = {});
NormalizedWord normalize(std::u32string_view text, const NormalizeOptions& options = {});

}  // namespace digalph
