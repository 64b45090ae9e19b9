#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "digalph/analyzer.hpp"
#include "digalph/comm_code.hpp"

namespace digalph {

struct CorpusEntry {
  std::string surface;
  std::string romanization;
  std::string english_gloss;
  std::optional<std::vector<CommCode>> expected_codes;
  std::optional<std::vector<PatternKind>> expected_patterns;
  std::optional<Tense> expected_tense;
  std::string section;
  std::vector<SegmentationHint> segmentation_hint;
  std::size_t line = 0;  // 1-based source line
};

// JSON Lines, one entry per non-blank line. Throws LineError (Parse or Encoding).
std::vector<CorpusEntry> read_corpus(std::istream& in);
// Throws Error(Io) when the file cannot be opened.
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct EntryResult {
  std::size_t index = 0;
  std::string surface;
  bool passed = false;
  std::vector<std::string> diffs;  // one line per mismatch
};

struct CheckReport {
  std::vector<EntryResult> entries;  // input order
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool all_passed() const { return failed == 0; }
};

CheckReport check_corpus(const std::vector<CorpusEntry>& entries, const NormalizeOptions& options = {});

}  // namespace digalph
