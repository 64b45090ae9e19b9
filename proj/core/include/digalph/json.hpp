#pragma once

#include <nlohmann/json.hpp>

#include "digalph/analyzer.hpp"
#include "digalph/corpus.hpp"
#include "digalph/formula.hpp"
#include "digalph/relation.hpp"
#include "digalph/state.hpp"
#include "digalph/truth_table.hpp"

// JSON shapes for everything the command line prints. Field names are part of the
// external interface; see schema/ at the repository root.
namespace digalph {

nlohmann::json to_json(const Formula& f);
nlohmann::json to_json(const StateDescription& d);
nlohmann::json to_json(const PatternAnnotation& p);
nlohmann::json to_json(const NormalizedWord& w);
nlohmann::json to_json(const Analysis& a);
nlohmann::json to_json(const CheckReport& report);

nlohmann::json truth_table_json(const TruthTable& table);
nlohmann::json two_column_json(const TwoColumnGrid& grid);
nlohmann::json table4_json(const LetterGrid& grid);

}  // namespace digalph
