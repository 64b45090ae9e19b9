#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "digalph/alphabet.hpp"
#include "digalph/analyzer.hpp"
#include "digalph/corpus.hpp"
#include "digalph/error.hpp"
#include "digalph/json.hpp"
#include "digalph/relation.hpp"
#include "digalph/truth_table.hpp"

namespace digalph::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "text";
  std::string mode = "lenient";
  bool expand_shadda = false;

  std::vector<std::string> text;
  std::vector<std::string> hints;
  std::vector<std::string> codes;
  std::string relations;
  std::vector<std::string> names;
  std::optional<std::string> apply_to;
  std::string table_kind;
  std::optional<std::string> corpus_path;
};

bool json_output(const Config& c) { return c.format == "json"; }

NormalizeOptions normalize_options(const Config& c) {
  return NormalizeOptions{*mode_from_string(c.mode), c.expand_shadda};
}

void print_json(std::ostream& out, const json& j) {
  out << j.dump(2, ' ', false, json::error_handler_t::strict) << '\n';
}

// Positional input, or all of stdin when the only argument is "-".
std::string gather_text(const std::vector<std::string>& args, std::istream& in) {
  if (args.size() == 1 && args.front() == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::string joined;
  for (const auto& a : args) {
    if (!joined.empty()) joined += ' ';
    joined += a;
  }
  return joined;
}

std::vector<std::string> split_whitespace(const std::string& text) {
  std::istringstream stream(text);
  return {std::istream_iterator<std::string>(stream), std::istream_iterator<std::string>()};
}

std::size_t parse_index(const std::string& text, const std::string& hint) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw UsageError("bad --hint \"" + hint + "\"; expected FIRST-LAST or TOKEN:FIRST-LAST");
  }
  return std::stoul(text);
}

SegmentationHint parse_hint(const std::string& hint) {
  SegmentationHint h;
  std::string span = hint;
  if (auto colon = hint.find(':'); colon != std::string::npos) {
    h.token = parse_index(hint.substr(0, colon), hint);
    span = hint.substr(colon + 1);
  }
  const auto dash = span.find('-');
  if (dash == std::string::npos) throw UsageError("bad --hint \"" + hint + "\"; expected FIRST-LAST or TOKEN:FIRST-LAST");
  h.first_unit = parse_index(span.substr(0, dash), hint);
  h.last_unit = parse_index(span.substr(dash + 1), hint);
  return h;
}

std::string atom_glyph(CommCode code) {
  const Letter& l = letter(letter_of(code));
  return l.is_diacritic() ? std::string(l.display) : l.glyph_utf8();
}

int cmd_analyze(const Config& c, Io& io) {
  AnalyzeOptions options{normalize_options(c), {}};
  for (const auto& h : c.hints) options.hints.push_back(parse_hint(h));
  const auto analyses = analyze(gather_text(c.text, io.in), options);

  if (json_output(c)) {
    json arr = json::array();
    for (const auto& a : analyses) arr.push_back(to_json(a));
    print_json(io.out, arr);
    return kSuccess;
  }
  for (std::size_t t = 0; t < analyses.size(); ++t) {
    const auto& a = analyses[t];
    auto& out = io.out;
    out << "token " << t << ": " << a.surface << '\n';
    out << "  normalized: " << a.normalized.to_string() << '\n';
    out << "  codes:";
    for (const auto& code : a.codes) out << ' ' << code.to_string();
    out << '\n';
    out << "  formula: " << a.formula.to_string() << '\n';
    out << "  tense: " << to_string(a.tense) << '\n';
    out << "  patterns:";
    if (a.patterns.empty()) out << " none";
    out << '\n';
    for (const auto& p : a.patterns) {
      out << "    " << to_string(p.kind) << " [" << p.first_unit << '-' << p.last_unit << ']';
      if (p.target_token) out << " over token " << *p.target_token;
      out << ": " << p.gloss << '\n';
    }
    out << "  glosses (application order):\n";
    for (const auto& g : a.glosses) {
      out << "    " << g.code.to_string() << ' ' << atom_glyph(g.code) << "  " << g.rendered << '\n';
    }
    if (!a.normalized.notes.empty()) {
      out << "  notes:";
      for (const auto& n : a.normalized.notes) out << ' ' << to_string(n.kind) << '@' << n.offset;
      out << '\n';
    }
  }
  return kSuccess;
}

int cmd_encode(const Config& c, Io& io) {
  const auto tokens = split_whitespace(gather_text(c.text, io.in));
  if (tokens.empty()) throw UsageError("encode needs text");
  const auto options = normalize_options(c);
  json arr = json::array();
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::vector<CommCode> codes;
    try {
      codes = encode_word(normalize(tokens[t], options));
    } catch (const Error& e) {
      throw TokenError(t, e);
    }
    if (json_output(c)) {
      json list = json::array();
      for (const auto& code : codes) list.push_back(code.to_string());
      arr.push_back({{"token", tokens[t]}, {"codes", std::move(list)}});
    } else {
      for (std::size_t i = 0; i < codes.size(); ++i) io.out << (i ? " " : "") << codes[i].to_string();
      io.out << '\n';
    }
  }
  if (json_output(c)) print_json(io.out, arr);
  return kSuccess;
}

int cmd_decode(const Config& c, Io& io) {
  const auto words = split_whitespace(gather_text(c.codes, io.in));
  if (words.empty()) throw UsageError("decode needs at least one code");
  std::vector<CommCode> codes;
  for (const auto& w : words) codes.push_back(CommCode::parse(w));
  const auto text = render_codes(codes);
  if (json_output(c)) {
    print_json(io.out, {{"codes", words}, {"text", text}});
  } else {
    io.out << text << '\n';
  }
  return kSuccess;
}

int cmd_compose(const Config& c, Io& io) {
  if (c.names.empty()) throw UsageError("compose needs at least one relation name");
  const auto env = load_relation_env(c.relations);
  std::vector<Atom> parts;
  for (const auto& name : c.names) parts.push_back(named_atom(name));
  const auto formula = Formula::from_application_order(std::move(parts));

  if (c.apply_to) {
    const auto image = apply(formula, env, *c.apply_to);
    if (json_output(c)) {
      print_json(io.out, {{"formula", to_json(formula)},
                          {"formula_text", formula.to_string()},
                          {"element", *c.apply_to},
                          {"image", image}});
    } else {
      io.out << "formula: " << formula.to_string() << '\n';
      for (const auto& e : image) io.out << e << '\n';
    }
    return kSuccess;
  }

  const auto relation = evaluate(formula, env);
  if (json_output(c)) {
    json pairs = json::array();
    for (const auto& [x, y] : relation.pairs()) pairs.push_back({x, y});
    print_json(io.out, {{"formula", to_json(formula)}, {"formula_text", formula.to_string()}, {"pairs", pairs}});
  } else {
    io.out << "formula: " << formula.to_string() << '\n';
    for (const auto& [x, y] : relation.pairs()) io.out << x << ' ' << y << '\n';
  }
  return kSuccess;
}

int cmd_table(const Config& c, Io& io) {
  auto& out = io.out;
  if (c.table_kind == "t1") {
    const auto table = enumerate_states(3);
    if (json_output(c)) {
      auto j = truth_table_json(table);
      j["kind"] = "t1";
      print_json(out, j);
      return kSuccess;
    }
    out << "a b c\n";
    for (std::size_t i = 0; i < table.size(); ++i) {
      const auto bits = table.row_bits(i);
      out << bits[0] << ' ' << bits[1] << ' ' << bits[2] << '\n';
    }
  } else if (c.table_kind == "t2") {
    const auto grid = two_column_layout(enumerate_states(5));
    if (json_output(c)) {
      auto j = two_column_json(grid);
      j["kind"] = "t2";
      print_json(out, j);
      return kSuccess;
    }
    out << "code   # | code   #\n";
    for (const auto& row : grid) {
      auto cell = [](const NumberedState& s) {
        std::ostringstream os;
        os << CommCode::from_value(s.bits).to_string() << ' ' << std::setw(2) << s.ordinal;
        return os.str();
      };
      out << cell(row[0]) << " | " << cell(row[1]) << '\n';
    }
  } else if (c.table_kind == "t3") {
    if (json_output(c)) {
      json rows = json::array();
      for (const Letter& l : letters()) {
        rows.push_back({{"ordinal", l.ordinal},
                        {"name", l.name},
                        {"glyph", l.glyph_utf8()},
                        {"code_binary", l.code.to_string()},
                        {"code_decimal", l.code.value()}});
      }
      print_json(out, {{"kind", "t3"}, {"rows", rows}});
      return kSuccess;
    }
    out << alphabet_tsv();
  } else {
    const auto grid = table4_layout();
    if (json_output(c)) {
      auto j = table4_json(grid);
      j["kind"] = "t4";
      print_json(out, j);
      return kSuccess;
    }
    for (const auto& row : grid) {
      for (std::size_t col = 0; col < row.size(); ++col) {
        const Letter& l = letter(row[col]);
        out << (col ? " | " : "") << l.name << ' ' << l.display << ' ' << l.code.to_string();
      }
      out << '\n';
    }
  }
  return kSuccess;
}

int cmd_corpus_check(const Config& c, Io& io) {
  std::string path;
  if (c.corpus_path) {
    path = *c.corpus_path;
  } else if (auto env = io.getenv("DIGALPH_CORPUS")) {
    path = *env;
  } else {
    throw UsageError("corpus check needs a file argument or DIGALPH_CORPUS");
  }
  const auto entries = load_corpus(path);
  const auto report = check_corpus(entries, normalize_options(c));
  if (json_output(c)) {
    print_json(io.out, to_json(report));
  } else {
    for (const auto& e : report.entries) {
      io.out << (e.passed ? "PASS " : "FAIL ") << std::setw(4) << e.index << ' ' << e.surface << '\n';
      for (const auto& d : e.diffs) io.out << "     " << d << '\n';
    }
    io.out << report.passed << '/' << report.entries.size() << " entries passed\n";
  }
  return report.all_passed() ? kSuccess : kCorpusFailures;
}

}  // namespace

int run(const std::vector<std::string>& args, Io io) {
  if (!io.getenv) {
    io.getenv = [](const std::string& name) -> std::optional<std::string> {
      if (const char* v = std::getenv(name.c_str())) return std::string(v);
      return std::nullopt;
    };
  }

  Config c;
  CLI::App app{"Digital alphabet codec, formula algebra and Arabic word analyzer", "digalph"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--mode", c.mode, "Normalization mode")->check(CLI::IsMember({"strict", "lenient"}));
  app.add_flag("--expand-shadda", c.expand_shadda, "Expand shadda into a doubled letter instead of dropping it");

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze each whitespace-separated token");
  analyze_cmd->add_option("text", c.text, "Text, or - for stdin")->required();
  analyze_cmd->add_option("--hint", c.hints, "Opaque sub-word span FIRST-LAST or TOKEN:FIRST-LAST (units)");

  auto* encode_cmd = app.add_subcommand("encode", "Print the five-bit codes of each token");
  encode_cmd->add_option("text", c.text, "Text, or - for stdin")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Print the glyphs for a code sequence");
  decode_cmd->add_option("codes", c.codes, "Five-bit codes, or - for stdin")->required();

  auto* compose_cmd = app.add_subcommand("compose", "Compose named relations in application order");
  compose_cmd->add_option("--relations", c.relations, "Relation environment (JSON)")->required();
  compose_cmd->add_option("names", c.names, "Relation names, first applied first")->required();
  compose_cmd->add_option("--apply", c.apply_to, "Print the image set of this element");

  auto* table_cmd = app.add_subcommand("table", "Render a state or alphabet table");
  table_cmd->add_option("--kind", c.table_kind, "t1, t2, t3 (alphabet TSV) or t4")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "t3", "t4"}));

  auto* corpus_cmd = app.add_subcommand("corpus", "Corpus regression tools");
  corpus_cmd->require_subcommand(1);
  auto* check_cmd = corpus_cmd->add_subcommand("check", "Check a JSON Lines corpus");
  check_cmd->add_option("file", c.corpus_path, "Corpus file (default: $DIGALPH_CORPUS)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(c, io);
    if (encode_cmd->parsed()) return cmd_encode(c, io);
    if (decode_cmd->parsed()) return cmd_decode(c, io);
    if (compose_cmd->parsed()) return cmd_compose(c, io);
    if (table_cmd->parsed()) return cmd_table(c, io);
    if (check_cmd->parsed()) return cmd_corpus_check(c, io);
  } catch (const UsageError& e) {
    io.err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    io.err << "input error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return kInputError;
  }
  io.err << "usage error: no subcommand\n";
  return kUsageError;
}

}  // namespace digalph::cli
