#include "digalph/json.hpp"

#include "digalph/utf8.hpp"

namespace digalph {

using nlohmann::json;

json to_json(const Formula& f) {
  auto atom = [](const Atom& a) {
    json j{{"atom", a.label}};
    if (a.code) j["code"] = a.code->to_string();
    return j;
  };
  if (f.is_atom()) return atom(f.atom());
  json parts = json::array();
  for (const auto& p : f.parts()) parts.push_back(atom(p));
  return json{{"compose", std::move(parts)}};
}

json to_json(const StateDescription& d) {
  auto presence = [](bool present) { return present ? "present" : "absent"; };
  return json{
      {"code", d.code.to_string()},
      {"presence",
       {{"source", presence(d.source_present)},
        {"subject", presence(d.subject_present)},
        {"destination", presence(d.destination_present)}}},
      {"scope", to_string(d.scope)},
      {"kind", to_string(d.kind)},
      {"text", d.rendered},
  };
}

json to_json(const PatternAnnotation& p) {
  json j{{"kind", to_string(p.kind)}, {"span", {p.first_unit, p.last_unit}}, {"gloss", p.gloss}};
  if (p.target_token) j["target_token"] = *p.target_token;
  return j;
}

json to_json(const NormalizedWord& w) {
  json units = json::array();
  for (const auto& u : w.units) {
    const Letter& l = letter(u.letter);
    json j{{"letter", l.slug}, {"glyph", l.glyph_utf8()}};
    if (u.diacritic) j["diacritic"] = letter(*u.diacritic).slug;
    units.push_back(std::move(j));
  }
  return units;
}

json to_json(const Analysis& a) {
  json codes = json::array();
  for (const auto& c : a.codes) codes.push_back(c.to_string());
  json glosses = json::array();
  for (const auto& g : a.glosses) glosses.push_back(to_json(g));
  json patterns = json::array();
  for (const auto& p : a.patterns) patterns.push_back(to_json(p));
  json notes = json::array();
  for (const auto& n : a.normalized.notes) {
    notes.push_back({{"kind", to_string(n.kind)}, {"offset", n.offset}, {"code_point", utf8::code_point_label(n.code_point)}});
  }
  return json{
      {"surface", a.surface},
      {"normalized", to_json(a.normalized)},
      {"codes", std::move(codes)},
      {"formula", to_json(a.formula)},
      {"glosses", std::move(glosses)},
      {"patterns", std::move(patterns)},
      {"tense", to_string(a.tense)},
      {"notes", std::move(notes)},
  };
}

json to_json(const CheckReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"index", e.index}, {"surface", e.surface}, {"passed", e.passed}, {"diffs", e.diffs}});
  }
  return json{{"total", report.entries.size()},
              {"passed", report.passed},
              {"failed", report.failed},
              {"entries", std::move(entries)}};
}

json truth_table_json(const TruthTable& table) {
  static constexpr const char* kNames = "abcdefghijklmnop";
  json columns = json::array();
  for (int i = 0; i < table.n_vars(); ++i) columns.push_back(std::string(1, kNames[i]));
  json rows = json::array();
  for (std::size_t i = 0; i < table.size(); ++i) rows.push_back(table.row_bits(i));
  return json{{"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

json two_column_json(const TwoColumnGrid& grid) {
  json rows = json::array();
  for (const auto& r : grid) {
    json row = json::array();
    for (const auto& cell : r) {
      row.push_back({{"code", CommCode::from_value(cell.bits).to_string()}, {"ordinal", cell.ordinal}});
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

json table4_json(const LetterGrid& grid) {
  json rows = json::array();
  for (const auto& r : grid) {
    json row = json::array();
    for (LetterId id : r) {
      const Letter& l = letter(id);
      row.push_back({{"letter", l.slug},
                     {"name", l.name},
                     {"glyph", l.glyph_utf8()},
                     {"code", l.code.to_string()},
                     {"ordinal", l.ordinal}});
    }
    rows.push_back(std::move(row));
  }
  return json{{"rows", std::move(rows)}};
}

}  // namespace digalph
