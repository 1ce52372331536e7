#pragma once

#include <cstdint>
#include <string>

#include "snorm/rational.hpp"
#include "snorm/schreier.hpp"
#include "snorm/sparse_vector.hpp"

namespace snorm {

// Result of an exact block-norm computation. The norm itself is typically
// irrational, so the exact value is carried as its p-th power; `decimal` is a
// rendering of the norm (p-th root) rounded half-even.
struct NormResult {
  Rational p_power;                 // norm^p, exact
  AdmissiblePartition certificate;  // successive admissible family attaining it
  std::string decimal;              // decimal rendering of the norm

  bool operator==(const NormResult& other) const = default;
};

// Float-mode result (non-integer exponents). Values carry double precision
// only; certificates are reconstructed with relative tolerance 1e-9.
struct ApproxNormResult {
  double value;  // the norm itself, not its p-th power
  AdmissiblePartition certificate;
};

// Validates the family (admissible, successive) and returns
// sum_j (abs_sum(x, N_j))^p — the p-th power of its score, kept exact.
Rational partition_power_sum(const SparseVector& x, const AdmissiblePartition& family,
                             unsigned p);

// Exact block norm: maximum of partition_power_sum over every successive
// admissible family, with a canonical maximizing family as certificate.
// Requires integer p >= 2. Certificate ties resolve to the lexicographically
// smallest family (sets compared by minimum, then size, then elements).
NormResult baernstein_norm(const SparseVector& x, unsigned p,
                           int digits = kDefaultDecimalDigits);

// Independent oracle: exhaustive enumeration of successive admissible
// families over the support. Refuses supports reaching past `support_cap`.
NormResult baernstein_norm_brute_force(const SparseVector& x, unsigned p,
                                       std::uint32_t support_cap = 16,
                                       int digits = kDefaultDecimalDigits);

// Float mode for real exponents p > 1; excluded from exact checks.
ApproxNormResult baernstein_norm_approx(const SparseVector& x, double p);

// sum_{n=q}^{r} n^{-p}: closed form for the p-th power of the block norm of
// harmonic_block_sum(q, r).
Rational inverse_power_sum(int q, int r, unsigned p);

// sum_{n=q}^{r} 1/n.
Rational harmonic_sum(int q, int r);

}  // namespace snorm
