#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "snorm/rational.hpp"
#include "snorm/sparse_vector.hpp"

namespace snorm {

// Exact Tsirelson norm via the implicit recursion
//   ||x|| = max( max_n |x_n| , (1/2) sup { sum_j ||E_j x|| } )
// where the sup runs over finite interval families k <= E_1 < ... < E_k.
// Families of size 1 never attain the sup on nonzero vectors, so the
// recursion restricts to k >= 2 and terminates on strictly shorter windows.
//
// An engine instance optionally caches results across calls, keyed by a
// canonical serialization; cached values always equal recomputation. Safe
// for concurrent use.
class TsirelsonEngine {
 public:
  explicit TsirelsonEngine(bool enable_cache = true) : cache_enabled_(enable_cache) {}

  Rational norm(const SparseVector& x) const;

 private:
  bool cache_enabled_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, Rational> cache_;
};

// One-shot convenience wrapper around a fresh engine.
Rational tsirelson_norm(const SparseVector& x);

// Norm of sum_n values[n] * t_{positions[n]} — the norm a tuple of block
// norms receives when carried on the subsequence basis at `positions`.
// Requires equal lengths and strictly increasing positions.
Rational subsequence_sum_norm(const std::vector<Rational>& values,
                              const std::vector<std::uint32_t>& positions);

// Comparison of a blockwise sum against its tuple-of-norms carried on chosen
// basis positions: A = ||sum_n xs[n]||, B = subsequence_sum_norm of the
// block norms. The sandwich bounds checked are B/3 <= A <= 18 B.
struct SandwichReport {
  Rational a_value;  // norm of the direct sum
  Rational b_value;  // norm of the norm tuple on the chosen positions
  Rational ratio;    // A/B (1 when both vanish)
  bool lower_ok;
  bool upper_ok;
};

// xs[n] must be supported inside dyadic block n+1; positions[n] must lie in
// [block_lower(n+1), block_lower(n+2)). An empty `positions` selects the
// default block_upper(n+1) for each n.
SandwichReport block_sandwich(const std::vector<SparseVector>& xs,
                              std::vector<std::uint32_t> positions = {});

// ell_1 comparison on admissible supports: checks l1/2 <= ||x|| <= l1.
struct L1ComparisonReport {
  Rational norm_value;
  Rational l1_value;
  bool lower_ok;
  bool upper_ok;
};

L1ComparisonReport l1_comparison(const SparseVector& x);

}  // namespace snorm
