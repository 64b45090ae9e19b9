#include "digalph/corpus.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "digalph/error.hpp"
#include "digalph/utf8.hpp"

namespace digalph {
namespace {

using nlohmann::json;

const std::set<std::string, std::less<>> kKnownFields = {
    "surface",         "romanization",   "english_gloss", "expected_codes",
    "expected_patterns", "expected_tense", "section",       "segmentation_hint",
};

std::string string_field(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) return {};
  if (!it->is_string()) throw LineError(ErrorKind::Parse, line, std::string(key) + " must be a string");
  return it->get<std::string>();
}

const json* array_field(const json& obj, const char* key, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return nullptr;
  if (!it->is_array()) throw LineError(ErrorKind::Parse, line, std::string(key) + " must be an array");
  return &*it;
}

SegmentationHint parse_hint(const json& h, std::size_t line) {
  auto index = [&](const json& v) {
    if (!v.is_number_unsigned()) throw LineError(ErrorKind::Parse, line, "segmentation_hint indices must be >= 0");
    return v.get<std::size_t>();
  };
  if (h.is_array() && h.size() == 2) return {0, index(h[0]), index(h[1])};
  if (h.is_array() && h.size() == 3) return {index(h[0]), index(h[1]), index(h[2])};
  throw LineError(ErrorKind::Parse, line, "segmentation_hint spans are [first, last] or [token, first, last]");
}

CorpusEntry parse_entry(const json& obj, std::size_t line) {
  if (!obj.is_object()) throw LineError(ErrorKind::Parse, line, "entry must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    if (!kKnownFields.contains(key)) throw LineError(ErrorKind::Parse, line, "unknown field \"" + key + "\"");
  }

  CorpusEntry e;
  e.line = line;
  e.surface = string_field(obj, "surface", line);
  if (e.surface.empty()) throw LineError(ErrorKind::Parse, line, "surface is required and must be non-empty");
  e.romanization = string_field(obj, "romanization", line);
  e.english_gloss = string_field(obj, "english_gloss", line);
  e.section = string_field(obj, "section", line);

  if (const json* codes = array_field(obj, "expected_codes", line)) {
    std::vector<CommCode> parsed;
    for (const auto& c : *codes) {
      const auto text = c.is_string() ? c.get<std::string>() : c.dump();
      auto code = CommCode::try_parse(text);
      if (!c.is_string() || !code) {
        throw LineError(ErrorKind::Parse, line, "bad code string \"" + text + "\"");
      }
      parsed.push_back(*code);
    }
    e.expected_codes = std::move(parsed);
  }
  if (const json* patterns = array_field(obj, "expected_patterns", line)) {
    std::vector<PatternKind> parsed;
    for (const auto& p : *patterns) {
      auto kind = p.is_string() ? pattern_kind_from_string(p.get<std::string>()) : std::nullopt;
      if (!kind) throw LineError(ErrorKind::Parse, line, "unknown pattern kind " + p.dump());
      parsed.push_back(*kind);
    }
    e.expected_patterns = std::move(parsed);
  }
  if (auto it = obj.find("expected_tense"); it != obj.end() && !it->is_null()) {
    auto tense = it->is_string() ? tense_from_string(it->get<std::string>()) : std::nullopt;
    if (!tense) throw LineError(ErrorKind::Parse, line, "unknown tense " + it->dump());
    e.expected_tense = *tense;
  }
  if (const json* hints = array_field(obj, "segmentation_hint", line)) {
    for (const auto& h : *hints) e.segmentation_hint.push_back(parse_hint(h, line));
  }
  return e;
}

std::string join_codes(const std::vector<CommCode>& codes) {
  std::string out;
  for (const auto& c : codes) {
    if (!out.empty()) out += ' ';
    out += c.to_string();
  }
  return out;
}

std::string join_patterns(const std::vector<PatternKind>& kinds) {
  std::string out = "[";
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (i) out += ", ";
    out += to_string(kinds[i]);
  }
  return out + "]";
}

EntryResult check_entry(const CorpusEntry& entry, std::size_t index, const NormalizeOptions& options) {
  EntryResult r{index, entry.surface, false, {}};
  std::vector<Analysis> analyses;
  try {
    analyses = analyze(entry.surface, AnalyzeOptions{options, entry.segmentation_hint});
  } catch (const Error& e) {
    r.diffs.push_back(std::string("analysis error: ") + e.what());
    return r;
  }

  std::vector<CommCode> codes;
  std::vector<PatternKind> patterns;
  for (const auto& a : analyses) {
    const auto glyphs = a.normalized.to_string();
    try {
      const auto decoded = decode_codes(a.codes);
      if (decoded != glyphs) r.diffs.push_back("round trip: decoded \"" + decoded + "\", normalized \"" + glyphs + "\"");
    } catch (const Error& e) {
      r.diffs.push_back(std::string("round trip: ") + e.what());
    }
    codes.insert(codes.end(), a.codes.begin(), a.codes.end());
    for (const auto& p : a.patterns) patterns.push_back(p.kind);
  }

  if (entry.expected_codes) {
    const auto& want = *entry.expected_codes;
    if (want.size() != codes.size()) {
      r.diffs.push_back("codes: expected " + std::to_string(want.size()) + " symbols (" + join_codes(want) +
                        "), got " + std::to_string(codes.size()) + " (" + join_codes(codes) + ")");
    } else {
      for (std::size_t i = 0; i < want.size(); ++i) {
        if (want[i] != codes[i]) {
          r.diffs.push_back("codes[" + std::to_string(i) + "]: expected " + want[i].to_string() + ", got " +
                            codes[i].to_string());
        }
      }
    }
  }
  if (entry.expected_patterns && *entry.expected_patterns != patterns) {
    r.diffs.push_back("patterns: expected " + join_patterns(*entry.expected_patterns) + ", got " +
                      join_patterns(patterns));
  }
  if (entry.expected_tense && *entry.expected_tense != analyses.back().tense) {
    r.diffs.push_back("tense: expected " + std::string(to_string(*entry.expected_tense)) + ", got " +
                      std::string(to_string(analyses.back().tense)));
  }
  r.passed = r.diffs.empty();
  return r;
}

}  // namespace

std::vector<CorpusEntry> read_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    std::size_t bad = 0;
    if (!utf8::decode(text, &bad)) {
      throw LineError(ErrorKind::Encoding, line, "invalid UTF-8 at byte " + std::to_string(bad));
    }
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    json obj;
    try {
      obj = json::parse(text);
    } catch (const json::parse_error& e) {
      throw LineError(ErrorKind::Parse, line, e.what());
    }
    try {
      entries.push_back(parse_entry(obj, line));
    } catch (const LineError&) {
      throw;
    } catch (const json::exception& e) {
      throw LineError(ErrorKind::Parse, line, e.what());
    }
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return read_corpus(in);
}

CheckReport check_corpus(const std::vector<CorpusEntry>& entries, const NormalizeOptions& options) {
  CheckReport report;
  report.entries.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    report.entries.push_back(check_entry(entries[i], i, options));
    if (report.entries.back().passed) {
      ++report.passed;
    } else {
      ++report.failed;
    }
  }
  return report;
}

}  // namespace digalph
