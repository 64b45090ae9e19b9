#include "digalph/alphabet.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "digalph/error.hpp"
#include "digalph/utf8.hpp"

namespace digalph {
namespace {

constexpr std::array<char32_t, 2> kHaVariants = {U'ﻩ', U'ﻪ'};

using L = LetterId;
constexpr auto C = LetterKind::Consonant;
constexpr auto D = LetterKind::Diacritic;

constexpr CommCode code(unsigned v) {
  return CommCode::from_bits(v & 16U, v & 8U, v & 4U, v & 2U, v & 1U);
}

// The digital alphabet as printed: ordinal, symbol, five-bit state.
// Ordinals 29-32 follow the rearranged grid and the prose naming of the marks.
const std::array<Letter, kLetterCount> kLetters = {{
    {L::Alif,   1, C, "alif",   "ʼalif",  U'ا', "ا",  {}, code(0b11111)},
    {L::Ba,     2, C, "ba",     "bāʼ",    U'ب', "ب",  {}, code(0b11110)},
    {L::Jim,    3, C, "jim",    "jīm",    U'ج', "ج",  {}, code(0b11101)},
    {L::Dal,    4, C, "dal",    "dāl",    U'د', "د",  {}, code(0b11100)},
    {L::Ha,     5, C, "ha",     "hāʼ",    U'ه', "هـ", kHaVariants, code(0b11011)},
    {L::Waw,    6, C, "waw",    "wāw",    U'و', "و",  {}, code(0b11010)},
    {L::Zayn,   7, C, "zayn",   "zayn",   U'ز', "ز",  {}, code(0b11001)},
    {L::Hha,    8, C, "hha",    "ḥāʼ",    U'ح', "ح",  {}, code(0b11000)},
    {L::Tta,    9, C, "tta",    "ṭāʼ",    U'ط', "ط",  {}, code(0b10111)},
    {L::Ya,    10, C, "ya",     "yāʼ",    U'ي', "ي",  {}, code(0b10110)},
    {L::Kaf,   11, C, "kaf",    "kāf",    U'ك', "ك",  {}, code(0b10101)},
    {L::Lam,   12, C, "lam",    "lām",    U'ل', "ل",  {}, code(0b10100)},
    {L::Mim,   13, C, "mim",    "mīm",    U'م', "م",  {}, code(0b10011)},
    {L::Nun,   14, C, "nun",    "nūn",    U'ن', "ن",  {}, code(0b10010)},
    {L::Sin,   15, C, "sin",    "sīn",    U'س', "س",  {}, code(0b10001)},
    {L::Ayn,   16, C, "ayn",    "ʻayn",   U'ع', "ع",  {}, code(0b10000)},
    {L::Fa,    17, C, "fa",     "fāʼ",    U'ف', "ف",  {}, code(0b01111)},
    {L::Sad,   18, C, "sad",    "ṣād",    U'ص', "ص",  {}, code(0b01110)},
    {L::Qaf,   19, C, "qaf",    "qāf",    U'ق', "ق",  {}, code(0b01101)},
    {L::Ra,    20, C, "ra",     "rāʼ",    U'ر', "ر",  {}, code(0b01100)},
    {L::Shin,  21, C, "shin",   "shīn",   U'ش', "ش",  {}, code(0b01011)},
    {L::Ta,    22, C, "ta",     "tāʼ",    U'ت', "ت",  {}, code(0b01010)},
    {L::Tha,   23, C, "tha",    "thāʼ",   U'ث', "ث",  {}, code(0b01001)},
    {L::Kha,   24, C, "kha",    "khāʼ",   U'خ', "خ",  {}, code(0b01000)},
    {L::Dhal,  25, C, "dhal",   "dhāl",   U'ذ', "ذ",  {}, code(0b00111)},
    {L::Dad,   26, C, "dad",    "ḍād",    U'ض', "ض",  {}, code(0b00110)},
    {L::Zza,   27, C, "zza",    "ẓāʼ",    U'ظ', "ظ",  {}, code(0b00101)},
    {L::Ghayn, 28, C, "ghayn",  "ghayn",  U'غ', "غ",  {}, code(0b00100)},
    {L::Dammah, 29, D, "dammah", "ḍammah", U'ُ', "◌ُ", {}, code(0b00011)},
    {L::Fathah, 30, D, "fathah", "fathah", U'َ', "◌َ", {}, code(0b00010)},
    {L::Kasrah, 31, D, "kasrah", "kasrah", U'ِ', "◌ِ", {}, code(0b00001)},
    {L::Sukun,  32, D, "sukun",  "sukūn",  U'ْ', "◌ْ", {}, code(0b00000)},
}};

struct ReverseIndex {
  std::array<LetterId, kLetterCount> by_code{};
  std::array<int, kLetterCount> ordinal_by_code{};

  ReverseIndex() {
    std::array<bool, kLetterCount> seen{};
    for (const Letter& l : kLetters) {
      const auto v = l.code.value();
      if (seen[v]) throw std::logic_error("alphabet table maps two letters to one code");
      seen[v] = true;
      by_code[v] = l.id;
      ordinal_by_code[v] = l.ordinal;
    }
  }
};

const ReverseIndex& reverse_index() {
  static const ReverseIndex index;
  return index;
}

}  // namespace

std::string Letter::glyph_utf8() const {
  std::string out;
  utf8::append(out, glyph);
  return out;
}

std::span<const Letter> letters() { return kLetters; }

const Letter& letter(LetterId id) { return kLetters[static_cast<std::size_t>(id)]; }

CommCode code_of(LetterId id) { return letter(id).code; }

LetterId letter_of(CommCode code) { return reverse_index().by_code[code.value()]; }

int ordinal(CommCode code) { return reverse_index().ordinal_by_code[code.value()]; }

std::optional<LetterId> letter_from_code_point(char32_t cp) {
  for (const Letter& l : kLetters) {
    if (l.glyph == cp) return l.id;
    if (std::find(l.variants.begin(), l.variants.end(), cp) != l.variants.end()) return l.id;
  }
  return std::nullopt;
}

std::optional<LetterId> letter_from_slug(std::string_view slug) {
  for (const Letter& l : kLetters) {
    if (l.slug == slug) return l.id;
  }
  return std::nullopt;
}

std::string alphabet_tsv() {
  std::string out = "ordinal\tname\tglyph\tcode_binary\tcode_decimal\n";
  for (const Letter& l : kLetters) {
    out += std::to_string(l.ordinal);
    out += '\t';
    out += l.name;
    out += '\t';
    out += l.glyph_utf8();
    out += '\t';
    out += l.code.to_string();
    out += '\t';
    out += std::to_string(l.code.value());
    out += '\n';
  }
  return out;
}

}  // namespace digalph
