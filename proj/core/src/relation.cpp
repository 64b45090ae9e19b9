#include "digalph/relation.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "digalph/error.hpp"

namespace digalph {

FiniteRelation::FiniteRelation(ElementSet domain, std::set<std::pair<Element, Element>> pairs)
    : domain_(std::move(domain)), pairs_(std::move(pairs)) {
  for (const auto& [x, y] : pairs_) {
    if (!domain_.contains(x) || !domain_.contains(y)) {
      throw Error(ErrorKind::InvalidArgument, "pair (" + x + ", " + y + ") leaves the domain");
    }
    successors_[x].insert(y);
  }
}

FiniteRelation FiniteRelation::identity(const ElementSet& domain) {
  std::set<std::pair<Element, Element>> pairs;
  for (const auto& x : domain) pairs.emplace(x, x);
  return FiniteRelation(domain, std::move(pairs));
}

ElementSet FiniteRelation::image(const Element& x) const {
  if (auto it = successors_.find(x); it != successors_.end()) return it->second;
  return {};
}

ElementSet FiniteRelation::image(const ElementSet& xs) const {
  ElementSet out;
  for (const auto& x : xs) {
    if (auto it = successors_.find(x); it != successors_.end()) out.insert(it->second.begin(), it->second.end());
  }
  return out;
}

FiniteRelation compose(const FiniteRelation& first, const FiniteRelation& second) {
  ElementSet domain = first.domain();
  domain.insert(second.domain().begin(), second.domain().end());
  std::set<std::pair<Element, Element>> pairs;
  for (const auto& [x, y] : first.pairs()) {
    for (const auto& z : second.image(y)) pairs.emplace(x, z);
  }
  return FiniteRelation(std::move(domain), std::move(pairs));
}

namespace {

const FiniteRelation& lookup(const RelationEnv& env, const std::string& label) {
  auto it = env.find(label);
  if (it == env.end()) throw Error(ErrorKind::UnboundRelation, "unbound relation: " + label);
  return it->second;
}

}  // namespace

ElementSet apply(const Formula& f, const RelationEnv& env, const Element& x) {
  ElementSet current{x};
  for (const Atom& part : f.parts()) {
    current = lookup(env, part.label).image(current);
  }
  return current;
}

FiniteRelation evaluate(const Formula& f, const RelationEnv& env) {
  FiniteRelation result = lookup(env, f.parts().front().label);
  for (std::size_t i = 1; i < f.parts().size(); ++i) {
    result = compose(result, lookup(env, f.parts()[i].label));
  }
  return result;
}

RelationEnv relation_env_from_json(const nlohmann::json& doc) {
  try {
    ElementSet domain;
    for (const auto& e : doc.at("elements")) domain.insert(e.get<std::string>());
    RelationEnv env;
    for (const auto& [name, pairs_json] : doc.at("relations").items()) {
      std::set<std::pair<Element, Element>> pairs;
      for (const auto& p : pairs_json) {
        if (!p.is_array() || p.size() != 2) {
          throw Error(ErrorKind::Parse, "relation " + name + ": each pair must be [x, y]");
        }
        pairs.emplace(p[0].get<std::string>(), p[1].get<std::string>());
      }
      env.emplace(name, FiniteRelation(domain, std::move(pairs)));
    }
    return env;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("relation document: ") + e.what());
  }
}

RelationEnv load_relation_env(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return relation_env_from_json(doc);
}

}  // namespace digalph
