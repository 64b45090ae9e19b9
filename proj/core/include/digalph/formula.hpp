#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "digalph/alphabet.hpp"
#include "digalph/comm_code.hpp"

namespace digalph {

// A basic formula: a letter, or an opaque named relation or sub-word.
struct Atom {
  std::string label;
  std::optional<CommCode> code;  // set when the atom is a single letter

  friend bool operator==(const Atom&, const Atom&) = default;
};

Atom letter_atom(LetterId id);
Atom named_atom(std::string label);

// Either a single atom or a composition of two or more atoms. Composition is associative,
// so nested compositions are always flattened into one part list. Parts are kept in
// application order: parts()[0] applies first.
class Formula {
 public:
  Formula(Atom atom);  // NOLINT(google-explicit-constructor)

  // Throws Error(InvalidArgument) for an empty list.
  static Formula from_application_order(std::vector<Atom> parts);

  bool is_atom() const { return parts_.size() == 1; }
  const Atom& atom() const;  // requires is_atom()
  const std::vector<Atom>& parts() const { return parts_; }
  std::size_t atom_count() const { return parts_.size(); }

  // Nested call notation, outermost first: "ا(ل(كتاب))".
  std::string to_string() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  explicit Formula(std::vector<Atom> parts) : parts_(std::move(parts)) {}

  std::vector<Atom> parts_;
};

// f1 then f2: (f1 ∘ f2)(x) = f2(f1(x)).
Formula compose(const Formula& f1, const Formula& f2);

// n-fold self composition. Throws Error(InvalidArgument) for n < 1.
Formula power(const Formula& f, int n);

// Written text is formulated from its last symbol: the last written piece applies first.
// Throws Error(InvalidArgument) for an empty list.
Formula word_order_to_application_order(std::span<const Atom> writing_order);
Formula word_order_to_application_order(std::span<const LetterId> writing_order);

}  // namespace digalph
