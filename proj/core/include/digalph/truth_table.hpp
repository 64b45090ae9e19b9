#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "digalph/alphabet.hpp"

namespace digalph {

// All 2^n bit vectors of width n, from all-ones down to all-zeros.
class TruthTable {
 public:
  int n_vars() const { return n_vars_; }
  std::size_t size() const { return rows_.size(); }
  std::uint32_t row(std::size_t index) const { return rows_.at(index); }
  const std::vector<std::uint32_t>& rows() const { return rows_; }

  // Row `index` as a string of '0'/'1', most significant bit first.
  std::string row_bits(std::size_t index) const;

 private:
  friend TruthTable enumerate_states(int n_vars);
  TruthTable(int n_vars, std::vector<std::uint32_t> rows) : n_vars_(n_vars), rows_(std::move(rows)) {}

  int n_vars_;
  std::vector<std::uint32_t> rows_;
};

inline constexpr int kMaxTruthTableVars = 16;

// Throws Error(InvalidArgument) unless 1 <= n_vars <= 16.
TruthTable enumerate_states(int n_vars);

struct NumberedState {
  std::uint32_t bits;
  int ordinal;  // 1-based position in the source table
};

// Sixteen display rows pairing ordinal r with r + 16.
using TwoColumnGrid = std::array<std::array<NumberedState, 2>, 16>;

// Throws Error(InvalidArgument) unless the table has exactly 32 rows.
TwoColumnGrid two_column_layout(const TruthTable& table);

// Eight rows of four letters; display column 0 is leftmost, and each row lists four
// consecutive ordinals from right to left.
using LetterGrid = std::array<std::array<LetterId, 4>, 8>;

LetterGrid table4_layout();

}  // namespace digalph
