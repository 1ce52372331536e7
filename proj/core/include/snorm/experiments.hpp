#pragma once

#include <string>
#include <vector>

#include "snorm/rational.hpp"

namespace snorm {

// Growth experiment: for each q, compare the block-diagonal summation image
// of harmonic_block_sum(q, 2q) against the vector itself in the exact block
// norm. The numerator (image norm) is an exact rational that stays above
// 1/2, while the denominator (vector norm) shrinks, so the ratio grows
// without bound — the computational content of the unbounded-diagonal
// construction.
struct GrowthOptions {
  unsigned p = 2;
  int q_min = 3;
  int q_max = 6;
  // Rows past q = 6 work on supports of 16k+ coordinates; they refuse to run
  // unless large mode is on. Large mode also lifts the runtime budget.
  bool large = false;
  double budget_seconds = 60.0;
  int digits = kDefaultDecimalDigits;
};

struct GrowthRow {
  int q;
  Rational image_norm;          // exact block norm of the summation image
  Rational vector_norm_power;   // p-th power of the block norm of the vector
  std::string vector_norm_decimal;
  Rational ratio_power;         // image_norm^p / vector_norm_power
  std::string ratio_decimal;    // p-th root of ratio_power
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  bool complete = true;  // false when the runtime budget cut the table short
};

// Every cell is computed twice (engine vs. closed form) and cross-asserted
// before emission; monotonicity of the columns is asserted across rows.
// Throws std::invalid_argument for a bad range and std::runtime_error if any
// cross-check fails.
GrowthTable growth_table(const GrowthOptions& options);

}  // namespace snorm
