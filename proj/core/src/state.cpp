#include "digalph/state.hpp"

namespace digalph {

std::string_view to_string(KnowledgeScope scope) {
  switch (scope) {
    case KnowledgeScope::Mutual: return "mutual";
    case KnowledgeScope::SpeakerOnly: return "speaker_only";
    case KnowledgeScope::ListenerOnly: return "listener_only";
    case KnowledgeScope::Nobody: return "nobody";
  }
  return "nobody";
}

std::string_view to_string(KnowledgeKind kind) {
  switch (kind) {
    case KnowledgeKind::FormOnly: return "form_only";
    case KnowledgeKind::AttributeOnly: return "attribute_only";
    case KnowledgeKind::Both: return "both";
    case KnowledgeKind::Neither: return "neither";
  }
  return "neither";
}

KnowledgeScope knowledge_scope(CommCode code) {
  const bool source = code.source_present();
  const bool destination = code.destination_present();
  if (source && destination) return KnowledgeScope::Mutual;
  if (source) return KnowledgeScope::SpeakerOnly;
  if (destination) return KnowledgeScope::ListenerOnly;
  return KnowledgeScope::Nobody;
}

KnowledgeKind classify_knowledge(CommCode code) {
  const bool form = code.form_known();
  const bool attribute = code.attribute_known();
  if (form && attribute) return KnowledgeKind::Both;
  if (form) return KnowledgeKind::FormOnly;
  if (attribute) return KnowledgeKind::AttributeOnly;
  return KnowledgeKind::Neither;
}

StateDescription describe(CommCode code, const DescriptionCatalog& catalog) {
  StateDescription d;
  d.code = code;
  d.source_present = code.source_present();
  d.subject_present = code.subject_present();
  d.destination_present = code.destination_present();
  d.scope = knowledge_scope(code);
  d.kind = classify_knowledge(code);

  const std::string_view tmpl =
      catalog.sentences[static_cast<std::size_t>(d.scope)][static_cast<std::size_t>(d.kind)];
  const std::string_view subject =
      d.subject_present ? catalog.subject_available : catalog.subject_absent;
  constexpr std::string_view kSlot = "{subject}";
  d.rendered.assign(tmpl);
  if (auto pos = d.rendered.find(kSlot); pos != std::string::npos) {
    d.rendered.replace(pos, kSlot.size(), subject);
  }
  return d;
}

std::array<std::string, 5> explain_bits(CommCode code, const DescriptionCatalog& catalog) {
  const auto scope = static_cast<std::size_t>(knowledge_scope(code));
  return {
      std::string(code.source_present() ? catalog.source_present : catalog.source_absent),
      std::string(code.subject_present() ? catalog.subject_present_clause : catalog.subject_absent_clause),
      std::string(code.destination_present() ? catalog.destination_present : catalog.destination_absent),
      std::string(code.form_known() ? catalog.form_known[scope] : catalog.form_unknown[scope]),
      std::string(code.attribute_known() ? catalog.attribute_known[scope] : catalog.attribute_unknown[scope]),
  };
}

}  // namespace digalph
