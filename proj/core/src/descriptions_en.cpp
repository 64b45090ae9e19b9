#include "digalph/state.hpp"

namespace digalph {

const DescriptionCatalog& english_catalog() {
  static const DescriptionCatalog catalog{
      .sentences = {{
          // Mutual
          {"Both parties know only the form of {subject}.",
           "Both parties know only the attributes of {subject}.",
           "Both parties know the complete form and attributes of {subject}.",
           "Both parties know neither the form nor the attributes of {subject}."},
          // SpeakerOnly
          {"Only the speaker knows only the form of {subject}.",
           "Only the speaker knows only the attributes of {subject}.",
           "Only the speaker knows the complete form and attributes of {subject}.",
           "Only the speaker is present and knows neither the form nor the attributes of {subject}."},
          // ListenerOnly
          {"Only the listener knows only the form of {subject}.",
           "Only the listener knows only the attributes of {subject}.",
           "Only the listener knows the complete form and attributes of {subject}.",
           "Only the listener is present and knows neither the form nor the attributes of {subject}."},
          // Nobody
          {"Neither party is present; only the form of {subject} is defined.",
           "Neither party is present; only the attributes of {subject} are defined.",
           "Neither party is present; the form and attributes of {subject} are both defined.",
           "Neither party is present and nothing of {subject} is defined."},
      }},
      .subject_available = "an available subject",
      .subject_absent = "an absent subject",
      .source_present = "The source is available.",
      .source_absent = "The source is absent.",
      .subject_present_clause = "The subject is available.",
      .subject_absent_clause = "The subject is absent.",
      .destination_present = "The destination is available.",
      .destination_absent = "The destination is absent.",
      .form_known = {"The form of the subject is known to both source and destination.",
                     "The form of the subject is known to the source only.",
                     "The form of the subject is known to the destination only.",
                     "The form of the subject is defined with no party present."},
      .form_unknown = {"The form of the subject is unknown to both source and destination.",
                       "The form of the subject is unknown to the source.",
                       "The form of the subject is unknown to the destination.",
                       "The form of the subject is undefined."},
      .attribute_known = {"The attributes of the subject are known to both source and destination.",
                          "The attributes of the subject are known to the source only.",
                          "The attributes of the subject are known to the destination only.",
                          "The attributes of the subject are defined with no party present."},
      .attribute_unknown = {"The attributes of the subject are unknown to both source and destination.",
                            "The attributes of the subject are unknown to the source.",
                            "The attributes of the subject are unknown to the destination.",
                            "The attributes of the subject are undefined."},
  };
  return catalog;
}

}  // namespace digalph
