#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace digalph::testing {

// Validates against the subset of JSON Schema draft-07 used under schema/: type,
// properties, required, additionalProperties (boolean), items (single schema), enum,
// const, pattern, minItems, maxItems, minLength, minimum, maximum, oneOf, anyOf and
// local "#/definitions/..." references. Unknown keywords are reported as errors so a
// schema cannot silently outgrow the validator.
class SchemaLite {
 public:
  explicit SchemaLite(nlohmann::json root) : root_(std::move(root)) {}

  // Empty on success; otherwise one message per violation, prefixed by a JSON pointer.
  std::vector<std::string> validate(const nlohmann::json& instance) const;

 private:
  void check(const nlohmann::json& schema, const nlohmann::json& instance, const std::string& where,
             std::vector<std::string>& errors) const;
  const nlohmann::json& resolve(const std::string& ref) const;

  nlohmann::json root_;
};

nlohmann::json load_json_file(const std::string& path);

}  // namespace digalph::testing
