#include "digalph/truth_table.hpp"

#include "digalph/error.hpp"

namespace digalph {

std::string TruthTable::row_bits(std::size_t index) const {
  const std::uint32_t value = row(index);
  std::string out(static_cast<std::size_t>(n_vars_), '0');
  for (int i = 0; i < n_vars_; ++i) {
    if ((value >> (n_vars_ - 1 - i)) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

TruthTable enumerate_states(int n_vars) {
  if (n_vars < 1 || n_vars > kMaxTruthTableVars) {
    throw Error(ErrorKind::InvalidArgument,
                "truth table width must be in [1, 16], got " + std::to_string(n_vars));
  }
  const std::uint32_t count = 1U << n_vars;
  std::vector<std::uint32_t> rows;
  rows.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) rows.push_back(count - 1 - i);
  return TruthTable(n_vars, std::move(rows));
}

TwoColumnGrid two_column_layout(const TruthTable& table) {
  if (table.size() != 32) {
    throw Error(ErrorKind::InvalidArgument,
                "two-column layout needs 32 rows, got " + std::to_string(table.size()));
  }
  TwoColumnGrid grid{};
  for (std::size_t r = 0; r < 16; ++r) {
    grid[r][0] = {table.row(r), static_cast<int>(r + 1)};
    grid[r][1] = {table.row(r + 16), static_cast<int>(r + 17)};
  }
  return grid;
}

LetterGrid table4_layout() {
  LetterGrid grid{};
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const auto ord = 4 * r + (4 - c);
      grid[r][c] = letters()[ord - 1].id;
    }
  }
  return grid;
}

}  // namespace digalph
