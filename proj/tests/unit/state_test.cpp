#include <digalph/state.hpp>

#include <gtest/gtest.h>

#include <set>

namespace digalph {
namespace {

TEST(StateTest, ScopeFollowsSourceAndDestination) {
  EXPECT_EQ(knowledge_scope(CommCode::parse("10100")), KnowledgeScope::Mutual);
  EXPECT_EQ(knowledge_scope(CommCode::parse("11011")), KnowledgeScope::SpeakerOnly);
  EXPECT_EQ(knowledge_scope(CommCode::parse("01111")), KnowledgeScope::ListenerOnly);
  EXPECT_EQ(knowledge_scope(CommCode::parse("01011")), KnowledgeScope::Nobody);
}

TEST(StateTest, KindFollowsLastTwoBits) {
  EXPECT_EQ(classify_knowledge(CommCode::parse("00010")), KnowledgeKind::FormOnly);
  EXPECT_EQ(classify_knowledge(CommCode::parse("00001")), KnowledgeKind::AttributeOnly);
  EXPECT_EQ(classify_knowledge(CommCode::parse("00011")), KnowledgeKind::Both);
  EXPECT_EQ(classify_knowledge(CommCode::parse("00000")), KnowledgeKind::Neither);
}

TEST(StateTest, DescribeFillsSubjectSlot) {
  const StateDescription d = describe(CommCode::parse("10110"));
  EXPECT_TRUE(d.source_present);
  EXPECT_FALSE(d.subject_present);
  EXPECT_TRUE(d.destination_present);
  EXPECT_EQ(d.scope, KnowledgeScope::Mutual);
  EXPECT_EQ(d.kind, KnowledgeKind::FormOnly);
  EXPECT_EQ(d.rendered, "Both parties know only the form of an absent subject.");
  EXPECT_EQ(describe(CommCode::parse("11111")).rendered,
            "Both parties know the complete form and attributes of an available subject.");
}

TEST(StateTest, EveryCodeRendersWithoutPlaceholder) {
  std::set<std::string> sentences;
  for (unsigned v = 0; v <= CommCode::kMax; ++v) {
    const StateDescription d = describe(CommCode::from_value(v));
    EXPECT_EQ(d.rendered.find('{'), std::string::npos) << v;
    EXPECT_FALSE(d.rendered.empty());
    sentences.insert(d.rendered);
    for (const std::string& clause : explain_bits(d.code)) EXPECT_FALSE(clause.empty());
  }
  // Scope, kind and subject presence together pick one of 4*4*2 sentences.
  EXPECT_EQ(sentences.size(), 32u);
}

TEST(StateTest, VocabularyNames) {
  EXPECT_EQ(to_string(KnowledgeScope::SpeakerOnly), "speaker_only");
  EXPECT_EQ(to_string(KnowledgeScope::ListenerOnly), "listener_only");
  EXPECT_EQ(to_string(KnowledgeKind::AttributeOnly), "attribute_only");
  EXPECT_EQ(to_string(KnowledgeKind::Neither), "neither");
}

}  // namespace
}  // namespace digalph
