#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json_fwd.hpp>

#include "digalph/formula.hpp"

namespace digalph {

using Element = std::string;
using ElementSet = std::set<Element>;

// A binary relation over a finite set of opaque elements. (x, y) reads "x R y".
class FiniteRelation {
 public:
  FiniteRelation() = default;
  // Throws Error(InvalidArgument) if a pair mentions an element outside `domain`.
  FiniteRelation(ElementSet domain, std::set<std::pair<Element, Element>> pairs);

  static FiniteRelation identity(const ElementSet& domain);

  const ElementSet& domain() const { return domain_; }
  const std::set<std::pair<Element, Element>>& pairs() const { return pairs_; }

  ElementSet image(const Element& x) const;
  ElementSet image(const ElementSet& xs) const;

  friend bool operator==(const FiniteRelation&, const FiniteRelation&) = default;

 private:
  ElementSet domain_;
  std::set<std::pair<Element, Element>> pairs_;
  std::map<Element, ElementSet> successors_;
};

// {(x, z) | exists y: (x, y) in first and (y, z) in second}. Domains are merged.
FiniteRelation compose(const FiniteRelation& first, const FiniteRelation& second);

using RelationEnv = std::map<std::string, FiniteRelation, std::less<>>;

// Threads the image set of {x} through the formula's parts in application order.
// Throws Error(UnboundRelation) for an atom label missing from `env`.
ElementSet apply(const Formula& f, const RelationEnv& env, const Element& x);

// Collapses a formula into the single relation it denotes under `env`.
FiniteRelation evaluate(const Formula& f, const RelationEnv& env);

// {"elements": [...], "relations": {"name": [[x, y], ...]}}
RelationEnv relation_env_from_json(const nlohmann::json& doc);
RelationEnv load_relation_env(const std::string& path);

}  // namespace digalph
