#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "digalph/comm_code.hpp"
#include "digalph/error.hpp"
#include "digalph/formula.hpp"
#include "digalph/normalize.hpp"
#include "digalph/state.hpp"

namespace digalph {

enum class Tense { Past, Present, FutureImperative, Timeless, Unknown };

std::string_view to_string(Tense tense);
std::optional<Tense> tense_from_string(std::string_view text);

enum class PatternKind {
  DefinitionTool,
  NegationTool,
  AnMarker,
  FinalDoubleAlif,
  FinalAlifAffinity,
  InitialDoubleAlif,
  InitialAlifMutualDefinition,
  SymmetricAffinity,
};

std::string_view to_string(PatternKind kind);
std::optional<PatternKind> pattern_kind_from_string(std::string_view text);

struct PatternAnnotation {
  PatternKind kind;
  std::size_t first_unit;  // inclusive span over units, writing order
  std::size_t last_unit;
  std::string gloss;
  std::optional<std::size_t> target_token;  // negation over a following token

  friend bool operator==(const PatternAnnotation&, const PatternAnnotation&) = default;
};

// Collapses units [first_unit, last_unit] of token `token` into one opaque atom.
struct SegmentationHint {
  std::size_t token = 0;
  std::size_t first_unit = 0;
  std::size_t last_unit = 0;

  friend bool operator==(const SegmentationHint&, const SegmentationHint&) = default;
};

struct AnalyzeOptions {
  NormalizeOptions normalize;
  std::vector<SegmentationHint> hints;
};

struct Analysis {
  std::string surface;
  NormalizedWord normalized;
  std::vector<CommCode> codes;  // writing order, diacritic after its letter
  Formula formula;
  std::vector<StateDescription> glosses;  // application order
  std::vector<PatternAnnotation> patterns;
  Tense tense = Tense::Unknown;
};

// A normalization failure inside a multi-token input.
class TokenError : public Error {
 public:
  TokenError(std::size_t token, const Error& cause);

  std::size_t token() const noexcept { return token_; }

 private:
  std::size_t token_;
};

std::vector<CommCode> encode_word(const NormalizedWord& word);

// Canonical glyphs for a code stream. Throws Error(OrphanDiacritic) when a diacritic does
// not directly follow a consonant, or for an empty list (InvalidArgument).
std::string decode_codes(std::span<const CommCode> codes);

// Like decode_codes, but an orphan diacritic is drawn on a dotted circle (U+25CC).
std::string render_codes(std::span<const CommCode> codes);

Tense infer_tense(const NormalizedWord& word);

std::vector<PatternAnnotation> detect_patterns(const NormalizedWord& word);

// Writing-order symbols reversed into application order; hinted spans become one atom.
// Throws Error(InvalidArgument) for hints outside the word or overlapping each other.
Formula build_formula(const NormalizedWord& word, std::span<const SegmentationHint> hints = {});

// Splits on whitespace and analyzes each token. A standalone لا followed by another token
// is read as a negation over that token. Throws TokenError.
std::vector<Analysis> analyze(std::string_view text, const AnalyzeOptions& options = {});

}  // namespace digalph
