#include "snorm/experiments.hpp"

#include <chrono>
#include <stdexcept>

#include "snorm/baernstein.hpp"
#include "snorm/operators.hpp"
#include "snorm/schreier.hpp"
#include "snorm/sparse_vector.hpp"

namespace snorm {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error("growth cross-check failed: " + message);
}

GrowthRow compute_row(int q, unsigned p, int digits) {
  const int r = 2 * q;
  const SparseVector y = harmonic_block_sum(q, r);

  // Numerator two ways: the summation image is sum_n (1/n) b_{m_n}, whose
  // support {m_q, ..., m_r} is admissible for q >= 3, so its block norm is
  // its plain coordinate sum — which must come out as the harmonic sum.
  const SparseVector image = summation_diagonal(r).apply(y);
  const Rational harmonic = harmonic_sum(q, r);
  const NormResult image_norm = baernstein_norm(image, p, digits);
  require(image_norm.p_power == pow_int(harmonic, p),
          "image norm differs from the harmonic sum at q=" + std::to_string(q));
  require(harmonic > Rational(1, 2),
          "image norm not above 1/2 at q=" + std::to_string(q));

  // Denominator against its closed form, certificate included.
  const NormResult vector_norm = baernstein_norm(y, p, digits);
  require(vector_norm.p_power == inverse_power_sum(q, r, p),
          "vector norm differs from closed form at q=" + std::to_string(q));
  AdmissiblePartition blocks;
  for (int n = q; n <= r; ++n) blocks.sets.push_back(dyadic_block(n));
  require(vector_norm.certificate == blocks,
          "certificate is not the dyadic block family at q=" + std::to_string(q));

  GrowthRow row;
  row.q = q;
  row.image_norm = harmonic;
  row.vector_norm_power = vector_norm.p_power;
  row.vector_norm_decimal = vector_norm.decimal;
  row.ratio_power = pow_int(harmonic, p) / vector_norm.p_power;
  row.ratio_decimal = root_decimal_string(row.ratio_power, p, digits);
  return row;
}

}  // namespace

GrowthTable growth_table(const GrowthOptions& options) {
  if (options.p < 2) throw std::invalid_argument("growth runs need an integer p >= 2");
  if (options.q_min < 3 || options.q_min > options.q_max || options.q_max > 8)
    throw std::invalid_argument("growth range must satisfy 3 <= q_min <= q_max <= 8");
  if (options.q_max > 6 && !options.large)
    throw std::invalid_argument(
        "rows past q = 6 run on very large supports; enable large mode to allow them");

  const auto started = std::chrono::steady_clock::now();
  const bool budgeted = !options.large && options.budget_seconds > 0;

  GrowthTable table;
  for (int q = options.q_min; q <= options.q_max; ++q) {
    if (budgeted && !table.rows.empty()) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - started;
      // Checked only between rows so that every emitted row is complete and
      // deterministic; the table is merely truncated under pressure.
      if (elapsed.count() > options.budget_seconds) {
        table.complete = false;
        break;
      }
    }
    table.rows.push_back(compute_row(q, options.p, options.digits));
    if (table.rows.size() > 1) {
      const GrowthRow& prev = table.rows[table.rows.size() - 2];
      const GrowthRow& curr = table.rows.back();
      require(curr.vector_norm_power < prev.vector_norm_power,
              "vector norm not strictly decreasing at q=" + std::to_string(q));
      require(curr.ratio_power > prev.ratio_power,
              "ratio not strictly increasing at q=" + std::to_string(q));
    }
  }
  return table;
}

}  // namespace snorm
