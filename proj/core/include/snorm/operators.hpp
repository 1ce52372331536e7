#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "snorm/rational.hpp"
#include "snorm/schreier.hpp"
#include "snorm/sparse_vector.hpp"

namespace snorm {

// One summand x (x) f of a finite-rank operator, where f is the coordinate
// functional at `functional`: y |-> y[functional] * x.
struct RankOneTerm {
  SparseVector vector;
  std::uint32_t functional;

  bool operator==(const RankOneTerm& other) const = default;
};

// Finite sum of rank-one terms in canonical form: terms sorted by functional
// index, duplicate functionals merged, zero vectors dropped.
class FiniteRankOperator {
 public:
  FiniteRankOperator() = default;
  explicit FiniteRankOperator(std::vector<RankOneTerm> terms);

  const std::vector<RankOneTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SparseVector apply(const SparseVector& y) const;

  // Largest dyadic block containing a functional index or a support index of
  // any term; 0 for the zero operator.
  int max_block_touched() const;

  bool operator==(const FiniteRankOperator& other) const = default;

 private:
  std::vector<RankOneTerm> terms_;
};

// Embedding of a tuple into operators: term n (0-based) pairs xs[n], which
// must be supported inside dyadic block n+1, with the functional at the last
// index of that block. Zero tuple entries produce no term.
FiniteRankOperator embed_block_tuple(const std::vector<SparseVector>& xs);

// General form with caller-chosen functional indices (strictly increasing),
// still with xs[n] supported inside dyadic block n+1.
FiniteRankOperator coordinate_embedding(const std::vector<SparseVector>& xs,
                                        const std::vector<std::uint32_t>& functionals);

// Left inverse of embed_block_tuple: entry n is the operator applied to the
// unit vector at the last index of block n+1, projected back onto that
// block. n_max = 0 means "up to the largest block the operator touches".
std::vector<SparseVector> extract_block_tuple(const FiniteRankOperator& op,
                                              std::size_t n_max = 0);

// Left inverse of coordinate_embedding: entry n probes the operator with the
// unit vector at witnesses[n] and projects onto dyadic block n+1.
std::vector<SparseVector> coordinate_extraction(
    const FiniteRankOperator& op, const std::vector<std::uint32_t>& witnesses);

// A linear map on the span of one dyadic block, stored sparsely; row/col are
// raw coordinate indices inside that block.
struct BlockMatrixEntry {
  std::uint32_t row;
  std::uint32_t col;
  Rational value;

  bool operator==(const BlockMatrixEntry& other) const = default;
};

struct BlockOperator {
  int block;
  std::vector<BlockMatrixEntry> entries;

  bool operator==(const BlockOperator& other) const = default;
};

// The per-block summation map: sends every coordinate of block n onto the
// first index of the block, so a block vector goes to (sum of coords) times
// that unit vector.
BlockOperator summation_block(int n);

// What a block-diagonal operator does on blocks it has no matrix for.
enum class TailPolicy { kIdentity, kZero };

// Applies a chosen matrix to each listed dyadic block of the input and the
// tail policy to every other block.
class BlockDiagonalOperator {
 public:
  BlockDiagonalOperator(std::vector<BlockOperator> blocks, TailPolicy tail);

  const std::vector<BlockOperator>& blocks() const { return blocks_; }
  TailPolicy tail() const { return tail_; }

  SparseVector apply(const SparseVector& y) const;

 private:
  std::vector<BlockOperator> blocks_;  // sorted by block number, unique
  TailPolicy tail_;
};

// Summation maps on blocks 1..max_block, zero beyond.
BlockDiagonalOperator summation_diagonal(int max_block);

// Best witnessed ratio ||op y||^p / ||y||^p over the given nonzero
// witnesses, using the exact block norm; a certified lower bound for the
// operator norm's p-th power.
Rational operator_norm_lower_bound(
    const std::function<SparseVector(const SparseVector&)>& op,
    const std::vector<SparseVector>& witnesses, unsigned p);

// Blockwise domination check: the embedded tuple applied to y, measured on
// n, never exceeds y measured on the block upper endpoints of n — provided
// every xs[k] has block norm at most 1 (the caller's responsibility).
bool mu_domination_holds(const std::vector<SparseVector>& xs, const SparseVector& y,
                         const IndexSet& n);

}  // namespace snorm
