#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli_runner.hpp"

namespace digalph::testing {

// One command line, checked in both output formats against
// tests/golden/<name>.txt and tests/golden/<name>.json.
struct GoldenCase {
  std::string name;
  std::vector<std::string> args;  // "@SRC@" expands to the source tree
  std::string stdin_text;
  std::string schema;             // file under schema/
  int exit_code = 0;
};

inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> kCases = {
      {"analyze_definite", {"analyze", "الكتاب", "--hint", "2-5"}, "", "analyze", 0},
      {"analyze_negation", {"analyze", "لا", "تلعب"}, "", "analyze", 0},
      {"analyze_notes", {"analyze", "أقبل", "رِ", "مدرسة"}, "", "analyze", 0},
      {"analyze_stdin", {"analyze", "-"}, "صحراء\nهاتان\n", "analyze", 0},
      {"encode", {"encode", "باب", "سماء"}, "", "encode", 0},
      {"encode_stdin", {"encode", "-"}, "كَتَبَ", "encode", 0},
      {"decode", {"decode", "11110", "00010", "11111", "11110"}, "", "decode", 0},
      {"decode_orphan", {"decode", "00000"}, "", "decode", 0},
      {"compose_pairs", {"compose", "--relations", "@SRC@/data/family.json", "brother", "mother"}, "", "compose", 0},
      {"compose_apply",
       {"compose", "--relations", "@SRC@/data/family.json", "father", "father", "--apply", "adam"},
       "",
       "compose",
       0},
      {"table_t1", {"table", "--kind", "t1"}, "", "table", 0},
      {"table_t2", {"table", "--kind", "t2"}, "", "table", 0},
      {"table_t3", {"table", "--kind", "t3"}, "", "table", 0},
      {"table_t4", {"table", "--kind", "t4"}, "", "table", 0},
      {"corpus_shipped", {"corpus", "check", "@SRC@/data/corpus.jsonl"}, "", "corpus", 0},
      {"corpus_failing", {"corpus", "check", "@SRC@/tests/data/corpus_failing.jsonl"}, "", "corpus", 1},
  };
  return kCases;
}

inline std::vector<std::string> expand_args(const GoldenCase& c, const std::string& format) {
  std::vector<std::string> out = {"--format", format};
  for (std::string a : c.args) {
    if (const auto at = a.find("@SRC@"); at != std::string::npos) a.replace(at, 5, DIGALPH_SOURCE_DIR);
    out.push_back(std::move(a));
  }
  return out;
}

inline std::string golden_path(const GoldenCase& c, const std::string& format) {
  return source_path("tests/golden/" + c.name + (format == "json" ? ".json" : ".txt"));
}

inline CliResult run_case(const GoldenCase& c, const std::string& format) {
  return run_cli(expand_args(c, format), c.stdin_text);
}

}  // namespace digalph::testing
