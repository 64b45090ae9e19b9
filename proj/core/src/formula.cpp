#include "digalph/formula.hpp"

#include <algorithm>

#include "digalph/error.hpp"

namespace digalph {

Atom letter_atom(LetterId id) {
  const Letter& l = letter(id);
  // Marks are labelled on their dotted-circle carrier so they read on their own.
  return Atom{l.is_diacritic() ? std::string(l.display) : l.glyph_utf8(), l.code};
}

Atom named_atom(std::string label) { return Atom{std::move(label), std::nullopt}; }

Formula::Formula(Atom atom) : parts_{std::move(atom)} {}

Formula Formula::from_application_order(std::vector<Atom> parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidArgument, "a formula needs at least one part");
  return Formula(std::move(parts));
}

const Atom& Formula::atom() const {
  if (!is_atom()) throw Error(ErrorKind::InvalidArgument, "formula is a composition, not an atom");
  return parts_.front();
}

std::string Formula::to_string() const {
  std::string out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    out += it->label;
    if (std::next(it) != parts_.rend()) out += '(';
  }
  out.append(parts_.size() - 1, ')');
  return out;
}

Formula compose(const Formula& f1, const Formula& f2) {
  std::vector<Atom> parts;
  parts.reserve(f1.atom_count() + f2.atom_count());
  parts.insert(parts.end(), f1.parts().begin(), f1.parts().end());
  parts.insert(parts.end(), f2.parts().begin(), f2.parts().end());
  return Formula::from_application_order(std::move(parts));
}

Formula power(const Formula& f, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "power exponent must be >= 1, got " + std::to_string(n));
  Formula result = f;
  for (int i = 1; i < n; ++i) result = compose(result, f);
  return result;
}

Formula word_order_to_application_order(std::span<const Atom> writing_order) {
  if (writing_order.empty()) throw Error(ErrorKind::InvalidArgument, "cannot build a formula from no symbols");
  std::vector<Atom> parts(writing_order.rbegin(), writing_order.rend());
  return Formula::from_application_order(std::move(parts));
}

Formula word_order_to_application_order(std::span<const LetterId> writing_order) {
  std::vector<Atom> atoms;
  atoms.reserve(writing_order.size());
  std::transform(writing_order.begin(), writing_order.end(), std::back_inserter(atoms), letter_atom);
  return word_order_to_application_order(std::span<const Atom>(atoms));
}

}  // namespace digalph
