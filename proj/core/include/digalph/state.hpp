#pragma once

#include <array>
#include <string>
#include <string_view>

#include "digalph/comm_code.hpp"

namespace digalph {

// Which of the two communicating parties hold the knowledge carried by a code.
enum class KnowledgeScope { Mutual, SpeakerOnly, ListenerOnly, Nobody };

// What is known about the subject: the last two bits of a code.
enum class KnowledgeKind { FormOnly, AttributeOnly, Both, Neither };

std::string_view to_string(KnowledgeScope scope);
std::string_view to_string(KnowledgeKind kind);

KnowledgeScope knowledge_scope(CommCode code);
KnowledgeKind classify_knowledge(CommCode code);

// Sentence templates for rendering a state. `{subject}` is replaced by the availability
// word of the subject. Swap a catalog to change the output language.
struct DescriptionCatalog {
  // [scope][kind], enum order.
  std::array<std::array<std::string_view, 4>, 4> sentences;
  std::string_view subject_available;
  std::string_view subject_absent;

  // Per-bit clauses, indexed like `sentences` for the two knowledge bits.
  std::string_view source_present, source_absent;
  std::string_view subject_present_clause, subject_absent_clause;
  std::string_view destination_present, destination_absent;
  std::array<std::string_view, 4> form_known, form_unknown;  // by scope
  std::array<std::string_view, 4> attribute_known, attribute_unknown;
};

const DescriptionCatalog& english_catalog();

struct StateDescription {
  CommCode code;
  bool source_present = false;
  bool subject_present = false;
  bool destination_present = false;
  KnowledgeScope scope = KnowledgeScope::Nobody;
  KnowledgeKind kind = KnowledgeKind::Neither;
  std::string rendered;

  friend bool operator==(const StateDescription&, const StateDescription&) = default;
};

StateDescription describe(CommCode code, const DescriptionCatalog& catalog = english_catalog());

// One clause per bit, left to right: source, subject, destination, form, attributes.
std::array<std::string, 5> explain_bits(CommCode code,
                                        const DescriptionCatalog& catalog = english_catalog());

}  // namespace digalph
