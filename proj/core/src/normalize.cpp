#include "digalph/normalize.hpp"

#include <algorithm>

#include "digalph/error.hpp"
#include "digalph/utf8.hpp"

namespace digalph {
namespace {

constexpr char32_t kTatweel = U'ـ';
constexpr char32_t kShadda = U'ّ';
constexpr char32_t kMaddaAbove = U'ٓ';
constexpr char32_t kHamzaAbove = U'ٔ';
constexpr char32_t kHamzaBelow = U'ٕ';
constexpr char32_t kAlefMaqsura = U'ى';
constexpr char32_t kAlefMadda = U'آ';
constexpr char32_t kTaMarbuta = U'ة';

struct Positioned {
  char32_t cp;
  std::size_t offset;
};

bool is_harakah(char32_t cp) { return cp >= U'ً' && cp <= U'ْ'; }

// Canonical compositions defined for the Arabic block.
char32_t compose_pair(char32_t base, char32_t mark) {
  switch (base) {
    case U'ا':
      if (mark == kMaddaAbove) return U'آ';
      if (mark == kHamzaAbove) return U'أ';
      if (mark == kHamzaBelow) return U'إ';
      break;
    case U'و':
      if (mark == kHamzaAbove) return U'ؤ';
      break;
    case U'ي':
      if (mark == kHamzaAbove) return U'ئ';
      break;
    case U'ه':
      if (mark == kHamzaAbove) return U'ۀ';
      break;
    case U'ہ':
      if (mark == kHamzaAbove) return U'ۂ';
      break;
    case U'ے':
      if (mark == kHamzaAbove) return U'ۓ';
      break;
    default:
      break;
  }
  return 0;
}

// Folds base + (harakat)* + combining hamza/madda into the precomposed letter, leaving the
// harakat in place. Harakat have lower combining classes than the hamza and madda marks,
// so they never block the composition.
std::vector<Positioned> compose_arabic(std::u32string_view text, std::vector<NormalizationNote>& notes) {
  std::vector<Positioned> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) out.push_back({text[i], i});

  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t j = i + 1;
    while (j < out.size() && is_harakah(out[j].cp)) ++j;
    if (j >= out.size()) continue;
    if (char32_t composed = compose_pair(out[i].cp, out[j].cp)) {
      notes.push_back({NoteKind::Composed, out[i].offset, out[j].cp});
      out[i].cp = composed;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
    }
  }
  return out;
}

bool is_hamza_carrier(char32_t cp) {
  switch (cp) {
    case U'ء':  // ء
    case U'أ':  // أ
    case U'ؤ':  // ؤ
    case U'إ':  // إ
    case U'ئ':  // ئ
    case U'ٱ':  // ٱ
      return true;
    default:
      return false;
  }
}

class Builder {
 public:
  Builder(const NormalizeOptions& options, std::vector<NormalizationNote> notes)
      : options_(options), notes_(std::move(notes)) {}

  void feed(const Positioned& p) {
    const char32_t cp = p.cp;
    if (cp == kTatweel) {
      note(NoteKind::TatweelRemoved, p);
    } else if (cp >= U'ﻵ' && cp <= U'ﻼ') {
      note(NoteKind::LigatureDecomposed, p);
      push(LetterId::Lam);
      push(LetterId::Alif);
      if (cp <= U'ﻶ') {
        note(NoteKind::MaddaExpanded, p);
        push(LetterId::Alif);
      } else if (cp <= U'ﻺ') {
        note(NoteKind::HamzaMapped, p);
      }
    } else if (cp == kAlefMaqsura) {
      note(NoteKind::MaqsuraMapped, p);
      push(LetterId::Alif);
    } else if (cp == kAlefMadda) {
      note(NoteKind::MaddaExpanded, p);
      push(LetterId::Alif);
      push(LetterId::Alif);
    } else if (is_hamza_carrier(cp)) {
      note(NoteKind::HamzaMapped, p);
      push(LetterId::Alif);
    } else if (cp == kTaMarbuta) {
      if (options_.mode == Mode::Strict) throw UnsupportedCharacterError(cp, p.offset);
      note(NoteKind::TaMarbutaMapped, p);
      push(LetterId::Ta);
    } else if (cp == kShadda) {
      shadda(p);
    } else if (auto id = letter_from_code_point(cp)) {
      if (letter(*id).is_diacritic()) {
        attach(*id, p);
      } else {
        push(*id);
      }
    } else {
      reject(p);
    }
  }

  NormalizedWord finish() && {
    if (units_.empty()) throw Error(ErrorKind::EmptyWord, "token has no letters after normalization");
    std::stable_sort(notes_.begin(), notes_.end(),
                     [](const auto& a, const auto& b) { return a.offset < b.offset; });
    return NormalizedWord{std::move(units_), std::move(notes_)};
  }

 private:
  void note(NoteKind kind, const Positioned& p) { notes_.push_back({kind, p.offset, p.cp}); }

  void push(LetterId id) { units_.push_back(Unit{id, std::nullopt}); }

  void reject(const Positioned& p) {
    if (options_.mode == Mode::Strict) throw UnsupportedCharacterError(p.cp, p.offset);
    note(NoteKind::Dropped, p);
  }

  void attach(LetterId mark, const Positioned& p) {
    if (units_.empty()) {
      if (options_.mode == Mode::Strict) {
        throw Error(ErrorKind::OrphanDiacritic,
                    "diacritic " + utf8::code_point_label(p.cp) + " at offset " + std::to_string(p.offset) +
                        " has no letter to attach to");
      }
      note(NoteKind::Dropped, p);
      return;
    }
    if (units_.back().diacritic) {
      reject(p);
      return;
    }
    units_.back().diacritic = mark;
  }

  void shadda(const Positioned& p) {
    if (units_.empty()) {
      if (options_.mode == Mode::Strict) {
        throw Error(ErrorKind::OrphanDiacritic,
                    "shadda at offset " + std::to_string(p.offset) + " has no letter to attach to");
      }
      note(NoteKind::Dropped, p);
      return;
    }
    if (!options_.expand_shadda) {
      note(NoteKind::ShaddaDropped, p);
      return;
    }
    // A vowel typed before the shadda belongs to the second, voiced copy.
    note(NoteKind::ShaddaExpanded, p);
    Unit second{units_.back().letter, units_.back().diacritic};
    units_.back().diacritic.reset();
    units_.push_back(second);
  }

  const NormalizeOptions& options_;
  std::vector<NormalizationNote> notes_;
  std::vector<Unit> units_;
};

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::Strict ? "strict" : "lenient"; }

std::optional<Mode> mode_from_string(std::string_view text) {
  if (text == "strict") return Mode::Strict;
  if (text == "lenient") return Mode::Lenient;
  return std::nullopt;
}

std::string_view to_string(NoteKind kind) {
  switch (kind) {
    case NoteKind::Composed: return "composed";
    case NoteKind::TatweelRemoved: return "tatweel_removed";
    case NoteKind::LigatureDecomposed: return "ligature_decomposed";
    case NoteKind::MaqsuraMapped: return "maqsura_mapped";
    case NoteKind::HamzaMapped: return "hamza_mapped";
    case NoteKind::MaddaExpanded: return "madda_expanded";
    case NoteKind::ShaddaDropped: return "shadda_dropped";
    case NoteKind::ShaddaExpanded: return "shadda_expanded";
    case NoteKind::TaMarbutaMapped: return "ta_marbuta_mapped";
    case NoteKind::Dropped: return "dropped";
  }
  return "dropped";
}

std::string NormalizedWord::to_string() const {
  std::string out;
  for (const Unit& u : units) {
    utf8::append(out, letter(u.letter).glyph);
    if (u.diacritic) utf8::append(out, letter(*u.diacritic).glyph);
  }
  return out;
}

bool NormalizedWord::has_note(NoteKind kind) const {
  return std::any_of(notes.begin(), notes.end(), [kind](const auto& n) { return n.kind == kind; });
}

NormalizedWord normalize(std::u32string_view text, const NormalizeOptions& options) {
  std::vector<NormalizationNote> notes;
  const auto composed = compose_arabic(text, notes);
  Builder builder(options, std::move(notes));
  for (const auto& p : composed) builder.feed(p);
  return std::move(builder).finish();
}

NormalizedWord normalize(std::string_view text, const NormalizeOptions& options) {
  std::size_t bad = 0;
  auto decoded = utf8::decode(text, &bad);
  if (!decoded) throw Error(ErrorKind::Encoding, "invalid UTF-8 at byte " + std::to_string(bad));
  return normalize(std::u32string_view(*decoded), options);
}

}  // namespace digalph
