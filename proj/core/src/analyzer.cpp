#include "digalph/analyzer.hpp"

#include <algorithm>
#include <array>

#include "digalph/alphabet.hpp"
#include "digalph/utf8.hpp"

namespace digalph {
namespace {

constexpr char32_t kDottedCircle = U'◌';

struct PatternInfo {
  PatternKind kind;
  std::string_view name;
  std::string_view gloss;
};

constexpr std::array<PatternInfo, 8> kPatterns = {{
    {PatternKind::DefinitionTool, "definition_tool",
     "ال definition tool: an absent, unknown formula becomes available and fully known to both parties."},
    {PatternKind::NegationTool, "negation_tool",
     "لا negation tool: an available, known formula becomes absent and unidentified to both parties."},
    {PatternKind::AnMarker, "an_marker",
     "ان marker: a formula the speaker knew only by its general form becomes available and fully known "
     "to both parties. Countable subject: exactly two elements. Uncountable subject: one unspecified, "
     "widely known element."},
    {PatternKind::FinalDoubleAlif, "final_double_alif",
     "Double affinity opening the formula: the shared subject is wide, large, far or uncountable."},
    {PatternKind::FinalAlifAffinity, "final_alif_affinity",
     "Affinity opening the formula: speaker and listener both know the available subject completely."},
    {PatternKind::InitialDoubleAlif, "initial_double_alif",
     "Mutual definition of a mutual definition closing the formula: the shared definition is widened."},
    {PatternKind::InitialAlifMutualDefinition, "initial_alif_mutual_definition",
     "Mutual definition closing the formula: both parties now share the whole formula."},
    {PatternKind::SymmetricAffinity, "symmetric_affinity",
     "Affinity joining two identical formulas on either side of an ʼalif."},
}};

const PatternInfo& info(PatternKind kind) { return kPatterns[static_cast<std::size_t>(kind)]; }

constexpr std::array<std::string_view, 5> kTenseNames = {"past", "present", "future_imperative", "timeless",
                                                         "unknown"};

class PatternCollector {
 public:
  explicit PatternCollector(std::size_t size) : claimed_(size, false) {}

  // Adds the annotation unless its span overlaps one already emitted.
  bool offer(PatternKind kind, std::size_t first, std::size_t last) {
    for (std::size_t i = first; i <= last; ++i) {
      if (claimed_[i]) return false;
    }
    std::fill(claimed_.begin() + static_cast<std::ptrdiff_t>(first),
              claimed_.begin() + static_cast<std::ptrdiff_t>(last) + 1, true);
    out_.push_back({kind, first, last, std::string(info(kind).gloss), std::nullopt});
    return true;
  }

  std::vector<PatternAnnotation> take() && { return std::move(out_); }

 private:
  std::vector<bool> claimed_;
  std::vector<PatternAnnotation> out_;
};

bool is_negation_particle(const NormalizedWord& word) {
  return word.units.size() == 2 && word.units[0].letter == LetterId::Lam &&
         word.units[1].letter == LetterId::Alif;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (i < text.size()) {
    while (i < text.size() && space(text[i])) ++i;
    const std::size_t start = i;
    while (i < text.size() && !space(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

std::string_view to_string(Tense tense) { return kTenseNames[static_cast<std::size_t>(tense)]; }

std::optional<Tense> tense_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kTenseNames.size(); ++i) {
    if (kTenseNames[i] == text) return static_cast<Tense>(i);
  }
  return std::nullopt;
}

std::string_view to_string(PatternKind kind) { return info(kind).name; }

std::optional<PatternKind> pattern_kind_from_string(std::string_view text) {
  for (const auto& p : kPatterns) {
    if (p.name == text) return p.kind;
  }
  return std::nullopt;
}

TokenError::TokenError(std::size_t token, const Error& cause)
    : Error(cause.kind(), "token " + std::to_string(token) + ": " + cause.what()), token_(token) {}

std::vector<CommCode> encode_word(const NormalizedWord& word) {
  std::vector<CommCode> codes;
  codes.reserve(word.units.size() * 2);
  for (const Unit& u : word.units) {
    codes.push_back(code_of(u.letter));
    if (u.diacritic) codes.push_back(code_of(*u.diacritic));
  }
  return codes;
}

namespace {

std::string decode_impl(std::span<const CommCode> codes, bool carrier_for_orphans) {
  if (codes.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to decode");
  std::string out;
  bool after_consonant = false;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const Letter& l = letter(letter_of(codes[i]));
    if (l.is_diacritic()) {
      if (!after_consonant) {
        if (!carrier_for_orphans) {
          throw Error(ErrorKind::OrphanDiacritic, "diacritic code " + codes[i].to_string() + " at position " +
                                                      std::to_string(i) + " does not follow a letter");
        }
        utf8::append(out, kDottedCircle);
      }
      after_consonant = false;
    } else {
      after_consonant = true;
    }
    utf8::append(out, l.glyph);
  }
  return out;
}

}  // namespace

std::string decode_codes(std::span<const CommCode> codes) { return decode_impl(codes, false); }

std::string render_codes(std::span<const CommCode> codes) { return decode_impl(codes, true); }

Tense infer_tense(const NormalizedWord& word) {
  if (word.units.empty() || !word.units.back().diacritic) return Tense::Unknown;
  switch (*word.units.back().diacritic) {
    case LetterId::Fathah: return Tense::Past;
    case LetterId::Dammah: return Tense::Present;
    case LetterId::Kasrah: return Tense::FutureImperative;
    case LetterId::Sukun: return Tense::Timeless;
    default: return Tense::Unknown;
  }
}

std::vector<PatternAnnotation> detect_patterns(const NormalizedWord& word) {
  const auto& u = word.units;
  const std::size_t n = u.size();
  auto is = [&](std::size_t i, LetterId id) { return i < n && u[i].letter == id; };
  constexpr auto A = LetterId::Alif;

  PatternCollector out(n);
  if (n == 0) return std::move(out).take();

  if (n >= 3 && is(0, A) && is(1, LetterId::Lam)) out.offer(PatternKind::DefinitionTool, 0, 1);
  if (is_negation_particle(word)) out.offer(PatternKind::NegationTool, 0, 1);

  // Word end: the first formula applied.
  if (n >= 2 && is(n - 2, A) && is(n - 1, LetterId::Nun)) {
    out.offer(PatternKind::AnMarker, n - 2, n - 1);
  } else if (n >= 2 && is(n - 2, A) && is(n - 1, A)) {
    out.offer(PatternKind::FinalDoubleAlif, n - 2, n - 1);
  } else if (is(n - 1, A)) {
    out.offer(PatternKind::FinalAlifAffinity, n - 1, n - 1);
  }

  // Word start: the last formula applied.
  if (n >= 2 && is(0, A) && is(1, A)) {
    out.offer(PatternKind::InitialDoubleAlif, 0, 1);
  } else if (is(0, A)) {
    out.offer(PatternKind::InitialAlifMutualDefinition, 0, 0);
  }

  for (std::size_t i = 0; i + 2 < n; ++i) {
    if (u[i].letter != A && is(i + 1, A) && u[i + 2].letter == u[i].letter) {
      out.offer(PatternKind::SymmetricAffinity, i, i + 2);
    }
  }
  return std::move(out).take();
}

Formula build_formula(const NormalizedWord& word, std::span<const SegmentationHint> hints) {
  std::vector<SegmentationHint> sorted(hints.begin(), hints.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first_unit < b.first_unit; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& h = sorted[i];
    if (h.first_unit > h.last_unit || h.last_unit >= word.units.size()) {
      throw Error(ErrorKind::InvalidArgument, "segmentation hint " + std::to_string(h.first_unit) + "-" +
                                                  std::to_string(h.last_unit) + " is outside the word");
    }
    if (i > 0 && sorted[i - 1].last_unit >= h.first_unit) {
      throw Error(ErrorKind::InvalidArgument, "segmentation hints overlap");
    }
  }

  std::vector<Atom> writing;
  auto next_hint = sorted.begin();
  for (std::size_t i = 0; i < word.units.size();) {
    if (next_hint != sorted.end() && next_hint->first_unit == i) {
      NormalizedWord piece;
      piece.units.assign(word.units.begin() + static_cast<std::ptrdiff_t>(i),
                         word.units.begin() + static_cast<std::ptrdiff_t>(next_hint->last_unit) + 1);
      writing.push_back(named_atom(piece.to_string()));
      i = next_hint->last_unit + 1;
      ++next_hint;
      continue;
    }
    writing.push_back(letter_atom(word.units[i].letter));
    if (word.units[i].diacritic) writing.push_back(letter_atom(*word.units[i].diacritic));
    ++i;
  }
  return word_order_to_application_order(std::span<const Atom>(writing));
}

std::vector<Analysis> analyze(std::string_view text, const AnalyzeOptions& options) {
  const auto tokens = split_tokens(text);
  if (tokens.empty()) throw Error(ErrorKind::EmptyWord, "no tokens to analyze");

  std::vector<Analysis> out;
  out.reserve(tokens.size());
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    try {
      Analysis a{.surface = std::string(tokens[t]),
                 .normalized = normalize(tokens[t], options.normalize),
                 .codes = {},
                 .formula = Formula(named_atom("")),
                 .glosses = {},
                 .patterns = {},
                 .tense = Tense::Unknown};
      a.codes = encode_word(a.normalized);

      std::vector<SegmentationHint> hints;
      for (const auto& h : options.hints) {
        if (h.token == t) hints.push_back(h);
      }
      a.formula = build_formula(a.normalized, hints);
      for (auto it = a.codes.rbegin(); it != a.codes.rend(); ++it) a.glosses.push_back(describe(*it));
      a.patterns = detect_patterns(a.normalized);
      a.tense = infer_tense(a.normalized);
      out.push_back(std::move(a));
    } catch (const TokenError&) {
      throw;
    } catch (const Error& e) {
      throw TokenError(t, e);
    }
  }

  // لا over the following token: the next word is formulated first.
  for (std::size_t t = 0; t + 1 < out.size(); ++t) {
    if (!is_negation_particle(out[t].normalized)) continue;
    for (auto& p : out[t].patterns) {
      if (p.kind == PatternKind::NegationTool) p.target_token = t + 1;
    }
    out[t].formula = compose(Formula(named_atom(out[t + 1].normalized.to_string())), out[t].formula);
  }
  return out;
}

}  // namespace digalph
