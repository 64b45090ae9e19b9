// One line per acceptance criterion. Exit status is the number of failed criteria.

#include <digalph/alphabet.hpp>
#include <digalph/analyzer.hpp>
#include <digalph/corpus.hpp>
#include <digalph/formula.hpp>
#include <digalph/relation.hpp>
#include <digalph/state.hpp>
#include <digalph/truth_table.hpp>
#include <digalph/utf8.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden_cases.hpp"
#include "relation_oracle.hpp"
#include "schema_lite.hpp"

namespace {

using namespace digalph;
using digalph::testing::source_path;

// Collects mismatches; a criterion passes when none were recorded.
class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) messages_.push_back(what);
  }
  bool empty() const { return messages_.empty(); }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

std::vector<std::vector<std::string>> read_tsv(const std::string& relative, bool skip_header) {
  std::ifstream in(source_path(relative));
  if (!in) throw std::runtime_error("cannot open " + relative);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (std::exchange(first, false) && skip_header) continue;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// The 32 (ordinal, glyph, code) triples and the 8x4 rearranged grid.
void table_fidelity(Failures& f) {
  const auto rows = read_tsv("tests/data/table3.tsv", true);
  f.expect(rows.size() == 32, "table3.tsv must have 32 rows");
  for (const auto& row : rows) {
    const int ord = std::stoi(row.at(0));
    const Letter& l = letters()[ord - 1];
    f.expect(l.ordinal == ord, "ordinal " + row[0]);
    f.expect(std::string(l.name) == row.at(1), "name at " + row[0]);
    f.expect(l.glyph_utf8() == row.at(2), "glyph at " + row[0]);
    f.expect(l.code.to_string() == row.at(3), "code at " + row[0]);
    f.expect(std::to_string(l.code.value()) == row.at(4), "decimal at " + row[0]);
  }
  const LetterGrid grid = table4_layout();
  for (const auto& row : read_tsv("tests/data/table4.tsv", true)) {
    const Letter& l = letter(grid.at(std::stoul(row.at(0))).at(std::stoul(row.at(1))));
    f.expect(std::string(l.display) == row.at(2), "grid glyph at " + row[0] + "," + row[1]);
    f.expect(l.code.to_string() == row.at(3), "grid code at " + row[0] + "," + row[1]);
  }
}

void ordinal_law(Failures& f) {
  const TruthTable five = enumerate_states(5);
  for (unsigned v = 0; v <= CommCode::kMax; ++v) {
    const CommCode c = CommCode::from_value(v);
    f.expect(ordinal(c) == 32 - static_cast<int>(v), "ordinal of " + c.to_string());
    f.expect(five.row(ordinal(c) - 1) == v, "enumeration position of " + c.to_string());
    f.expect(letter(letter_of(c)).ordinal == ordinal(c), "letter ordinal of " + c.to_string());
  }
}

void truth_tables(Failures& f) {
  const TruthTable three = enumerate_states(3);
  const auto t1 = read_tsv("tests/data/table1.txt", false);
  f.expect(three.size() == t1.size(), "table 1 row count");
  for (std::size_t i = 0; i < t1.size() && i < three.size(); ++i) {
    f.expect(three.row_bits(i) == t1[i].at(0), "table 1 row " + std::to_string(i));
  }
  const TwoColumnGrid grid = two_column_layout(enumerate_states(5));
  const auto t2 = read_tsv("tests/data/table2.tsv", false);
  f.expect(t2.size() == 16, "table 2 row count");
  for (std::size_t r = 0; r < t2.size() && r < 16; ++r) {
    for (int side = 0; side < 2; ++side) {
      const NumberedState& s = grid[r][side];
      f.expect(CommCode::from_value(s.bits).to_string() == t2[r].at(2 * side), "table 2 code r" + std::to_string(r));
      f.expect(std::to_string(s.ordinal) == t2[r].at(2 * side + 1), "table 2 ordinal r" + std::to_string(r));
    }
    f.expect(grid[r][1].ordinal == grid[r][0].ordinal + 16, "table 2 pairing r" + std::to_string(r));
  }
  std::size_t cells = 0;
  const LetterGrid t4 = table4_layout();
  for (const auto& row : read_tsv("tests/data/table4.tsv", true)) {
    const Letter& l = letter(t4.at(std::stoul(row.at(0))).at(std::stoul(row.at(1))));
    f.expect(l.code.to_string() == row.at(3), "table 4 cell " + row[0] + "," + row[1]);
    ++cells;
  }
  f.expect(cells == 32, "table 4 cell count");
}

void worked_decoding(Failures& f) {
  const CommCode c = CommCode::parse("10110");
  const StateDescription d = describe(c);
  f.expect(d.source_present && !d.subject_present && d.destination_present, "presence (1,0,1)");
  f.expect(d.scope == KnowledgeScope::Mutual, "scope mutual");
  f.expect(d.kind == KnowledgeKind::FormOnly, "kind form_only");
  f.expect(d.rendered == "Both parties know only the form of an absent subject.", "rendered: " + d.rendered);
  const std::array<std::string, 5> expected = {
      "The source is available.",
      "The subject is absent.",
      "The destination is available.",
      "The form of the subject is known to both source and destination.",
      "The attributes of the subject are unknown to both source and destination.",
  };
  const auto clauses = explain_bits(c);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    f.expect(clauses[i] == expected[i], "clause " + std::to_string(i) + ": " + clauses[i]);
  }
}

void composition_algebra(Failures& f) {
  using namespace digalph::testing;
  constexpr int kTrials = 1000;
  std::mt19937_64 rng(0x5eed'acce);
  std::uniform_int_distribution<std::size_t> size(1, 6);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  std::uniform_int_distribution<int> exponent(1, 4);
  int failures = 0;
  for (int i = 0; i < kTrials; ++i) {
    const auto domain = make_domain(size(rng));
    const ElementSet elements(domain.begin(), domain.end());
    const PairSet r = random_pairs(rng, domain, density(rng));
    const PairSet s = random_pairs(rng, domain, density(rng));
    const PairSet t = random_pairs(rng, domain, density(rng));
    const RelationEnv env = {{"r", FiniteRelation(elements, r)},
                             {"s", FiniteRelation(elements, s)},
                             {"t", FiniteRelation(elements, t)}};
    const Formula fr = named_atom("r"), fs = named_atom("s"), ft = named_atom("t");
    const FiniteRelation left = compose(evaluate(compose(fr, fs), env), env.at("t"));
    const FiniteRelation right = compose(env.at("r"), evaluate(compose(fs, ft), env));
    const PairSet oracle = oracle_compose(domain, oracle_compose(domain, r, s), t);
    bool ok = left.pairs() == oracle && right.pairs() == oracle;
    for (const auto& x : domain) ok = ok && left.image(x) == right.image(x);
    const int m = exponent(rng), n = exponent(rng);
    const FiniteRelation sum = evaluate(power(fr, m + n), env);
    ok = ok && sum == compose(evaluate(power(fr, m), env), evaluate(power(fr, n), env));
    ok = ok && sum.pairs() == oracle_power(domain, r, m + n);
    if (!ok) ++failures;
  }
  f.expect(failures == 0, std::to_string(failures) + " of " + std::to_string(kTrials) + " trials failed");

  const RelationEnv family = load_relation_env(source_path("data/family.json"));
  const ElementSet& d = family.at("father").domain();
  const std::vector<std::string> domain(d.begin(), d.end());
  const PairSet uncle = oracle_compose(domain, family.at("brother").pairs(), family.at("mother").pairs());
  const PairSet grandfather = oracle_power(domain, family.at("father").pairs(), 2);
  f.expect(!uncle.empty() && !grandfather.empty(), "kinship oracle is empty");
  f.expect(evaluate(compose(named_atom("brother"), named_atom("mother")), family).pairs() == uncle, "uncle");
  f.expect(evaluate(power(named_atom("father"), 2), family).pairs() == grandfather, "grandfather");
}

void ordering_convention(Failures& f) {
  for (const CorpusEntry& e : load_corpus(source_path("data/corpus.jsonl"))) {
    std::stringstream tokens(e.surface);
    std::string token;
    while (tokens >> token) {
      const NormalizedWord w = normalize(token);
      const Formula formula = build_formula(w);
      std::vector<Atom> written;
      for (const Unit& u : w.units) {
        written.push_back(letter_atom(u.letter));
        if (u.diacritic) written.push_back(letter_atom(*u.diacritic));
      }
      bool reversed = formula.atom_count() == written.size();
      for (std::size_t i = 0; reversed && i < written.size(); ++i) {
        reversed = formula.parts()[i] == written[written.size() - 1 - i];
      }
      f.expect(reversed, "application order of " + token);
    }
  }
  AnalyzeOptions hinted;
  hinted.hints = {{0, 2, 5}};
  const auto definite = analyze("الكتاب", hinted);
  f.expect(definite.at(0).formula ==
               Formula::from_application_order({named_atom("كتاب"), letter_atom(LetterId::Lam), letter_atom(LetterId::Alif)}),
           "الكتاب structure");
  f.expect(definite.at(0).formula.to_string() == "ا(ل(كتاب))", "الكتاب: " + definite.at(0).formula.to_string());
  const auto negation = analyze("لا تلعب");
  f.expect(negation.at(0).formula ==
               Formula::from_application_order({named_atom("تلعب"), letter_atom(LetterId::Alif), letter_atom(LetterId::Lam)}),
           "لا تلعب structure");
  f.expect(negation.at(0).formula.to_string() == "ل(ا(تلعب))", "لا تلعب: " + negation.at(0).formula.to_string());
}

void corpus_regression(Failures& f) {
  const auto entries = load_corpus(source_path("data/corpus.jsonl"));
  f.expect(entries.size() >= 40, "corpus has " + std::to_string(entries.size()) + " entries");
  const CheckReport report = check_corpus(entries, {Mode::Lenient, false});
  for (const auto& r : report.entries) {
    for (const auto& d : r.diffs) f.expect(false, r.surface + ": " + d);
  }
  f.expect(report.passed == entries.size(), "pass rate below 100%");

  // Each named word must be present and declare the expectation checked above.
  const std::vector<std::pair<std::string, std::string>> required_patterns = {
      {"الكتاب", "definition_tool"}, {"لا تلعب", "negation_tool"},
      {"رجلان", "an_marker"},          {"شبعان", "an_marker"},
      {"هاتان", "an_marker"},          {"باب", "symmetric_affinity"},
      {"صحراء", "final_double_alif"},  {"سماء", "final_double_alif"},
      {"ماء", "final_double_alif"},    {"إعداد", "initial_alif_mutual_definition"},
      {"أقبل", "initial_alif_mutual_definition"}, {"إهداء", "initial_alif_mutual_definition"},
      {"آثار", "initial_double_alif"}, {"آتي", "initial_double_alif"},
  };
  for (const auto& [word, kind] : required_patterns) {
    bool declared = false;
    for (const auto& e : entries) {
      if (e.surface != word || !e.expected_patterns) continue;
      for (PatternKind k : *e.expected_patterns) declared = declared || to_string(k) == kind;
    }
    f.expect(declared, word + " must declare " + kind);
  }
  bool imperative = false;
  for (const auto& e : entries) {
    imperative = imperative || (e.surface == "رِ" && e.expected_tense == Tense::FutureImperative);
  }
  f.expect(imperative, "رِ must declare future_imperative");
}

void cli_contract(Failures& f) {
  using namespace digalph::testing;
  for (const GoldenCase& c : golden_cases()) {
    for (const std::string format : {"text", "json"}) {
      const CliResult first = run_case(c, format);
      const CliResult second = run_case(c, format);
      const std::string label = c.name + " (" + format + ")";
      f.expect(first.exit_code == c.exit_code, label + ": exit " + std::to_string(first.exit_code));
      f.expect(first.out == read_file(golden_path(c, format)), label + ": differs from golden file");
      f.expect(first.out == second.out && first.err == second.err, label + ": not deterministic");
      if (format == "json") {
        const SchemaLite schema(load_json_file(source_path("schema/" + c.schema + ".schema.json")));
        const auto errors = schema.validate(nlohmann::json::parse(first.out));
        f.expect(errors.empty(), label + ": " + (errors.empty() ? "" : errors.front()));
      }
    }
  }
}

struct Criterion {
  int number;
  const char* name;
  double budget_ms;
  std::function<void(Failures&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table fidelity", 1000, table_fidelity},
      {2, "ordinal law", 1000, ordinal_law},
      {3, "truth tables", 1000, truth_tables},
      {4, "worked decoding of 10110", 1000, worked_decoding},
      {5, "composition algebra", 10000, composition_algebra},
      {6, "ordering convention", 1000, ordering_convention},
      {7, "corpus regression", 5000, corpus_regression},
      {8, "cli contract", 5000, cli_contract},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Failures failures;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(failures);
    } catch (const std::exception& e) {
      failures.expect(false, std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    failures.expect(ms <= c.budget_ms, "over time budget");
    const bool pass = failures.empty();
    std::printf("%s criterion %d: %s (%.1f ms, budget %.0f ms)\n", pass ? "PASS" : "FAIL", c.number, c.name, ms,
                c.budget_ms);
    for (const auto& m : failures.messages()) std::printf("    %s\n", m.c_str());
    if (!pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
