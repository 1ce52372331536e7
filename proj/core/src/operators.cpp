#include "snorm/operators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "snorm/baernstein.hpp"

namespace snorm {
namespace {

void require_block_support(const SparseVector& x, int block, std::size_t position) {
  if (x.is_zero()) return;
  if (x.min_index() < block_lower(block) || x.max_index() > block_upper(block))
    throw std::invalid_argument("tuple entry " + std::to_string(position + 1) +
                                " is not supported in dyadic block " +
                                std::to_string(block));
}

}  // namespace

FiniteRankOperator::FiniteRankOperator(std::vector<RankOneTerm> terms)
    : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const RankOneTerm& t) { return t.vector.is_zero(); });
  for (const RankOneTerm& t : terms_)
    if (t.functional < 1)
      throw std::invalid_argument("functional indices must be >= 1");
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const RankOneTerm& a, const RankOneTerm& b) {
                     return a.functional < b.functional;
                   });
  std::vector<RankOneTerm> merged;
  merged.reserve(terms_.size());
  for (RankOneTerm& t : terms_) {
    if (!merged.empty() && merged.back().functional == t.functional)
      merged.back().vector = merged.back().vector + t.vector;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const RankOneTerm& t) { return t.vector.is_zero(); });
  terms_ = std::move(merged);
}

SparseVector FiniteRankOperator::apply(const SparseVector& y) const {
  SparseVector out;
  for (const RankOneTerm& t : terms_) {
    const Rational coeff = y.coordinate(t.functional);
    if (coeff != 0) out = out + t.vector.scaled(coeff);
  }
  return out;
}

int FiniteRankOperator::max_block_touched() const {
  int best = 0;
  for (const RankOneTerm& t : terms_) {
    best = std::max(best, block_index(t.functional));
    best = std::max(best, block_index(t.vector.max_index()));
  }
  return best;
}

FiniteRankOperator coordinate_embedding(const std::vector<SparseVector>& xs,
                                        const std::vector<std::uint32_t>& functionals) {
  if (xs.size() != functionals.size())
    throw std::invalid_argument("tuple and functional lists differ in length");
  std::vector<RankOneTerm> terms;
  terms.reserve(xs.size());
  for (std::size_t n = 0; n < xs.size(); ++n) {
    require_block_support(xs[n], static_cast<int>(n) + 1, n);
    if (n > 0 && functionals[n] <= functionals[n - 1])
      throw std::invalid_argument("functional indices must be strictly increasing");
    if (!xs[n].is_zero()) terms.push_back({xs[n], functionals[n]});
  }
  return FiniteRankOperator(std::move(terms));
}

FiniteRankOperator embed_block_tuple(const std::vector<SparseVector>& xs) {
  std::vector<std::uint32_t> functionals;
  functionals.reserve(xs.size());
  for (std::size_t n = 0; n < xs.size(); ++n)
    functionals.push_back(block_upper(static_cast<int>(n) + 1));
  return coordinate_embedding(xs, functionals);
}

std::vector<SparseVector> coordinate_extraction(
    const FiniteRankOperator& op, const std::vector<std::uint32_t>& witnesses) {
  std::vector<SparseVector> out;
  out.reserve(witnesses.size());
  for (std::size_t n = 0; n < witnesses.size(); ++n) {
    const SparseVector image = op.apply(unit_vector(witnesses[n]));
    out.push_back(image.restricted(dyadic_block(static_cast<int>(n) + 1)));
  }
  return out;
}

std::vector<SparseVector> extract_block_tuple(const FiniteRankOperator& op,
                                              std::size_t n_max) {
  if (n_max == 0) n_max = static_cast<std::size_t>(op.max_block_touched());
  std::vector<std::uint32_t> witnesses;
  witnesses.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n)
    witnesses.push_back(block_upper(static_cast<int>(n)));
  return coordinate_extraction(op, witnesses);
}

BlockOperator summation_block(int n) {
  BlockOperator out{n, {}};
  const std::uint32_t target = block_lower(n);
  for (std::uint32_t j = block_lower(n); j <= block_upper(n); ++j)
    out.entries.push_back({target, j, Rational(1)});
  return out;
}

BlockDiagonalOperator::BlockDiagonalOperator(std::vector<BlockOperator> blocks,
                                             TailPolicy tail)
    : blocks_(std::move(blocks)), tail_(tail) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](const BlockOperator& a, const BlockOperator& b) {
              return a.block < b.block;
            });
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    BlockOperator& b = blocks_[i];
    if (i > 0 && blocks_[i - 1].block == b.block)
      throw std::invalid_argument("duplicate matrix for dyadic block " +
                                  std::to_string(b.block));
    for (const BlockMatrixEntry& e : b.entries)
      if (e.row < block_lower(b.block) || e.row > block_upper(b.block) ||
          e.col < block_lower(b.block) || e.col > block_upper(b.block))
        throw std::invalid_argument("matrix entry outside dyadic block " +
                                    std::to_string(b.block));
    // Column-major order lets apply() binary-search the entries per input
    // coordinate.
    std::sort(b.entries.begin(), b.entries.end(),
              [](const BlockMatrixEntry& x, const BlockMatrixEntry& y) {
                return x.col != y.col ? x.col < y.col : x.row < y.row;
              });
  }
}

SparseVector BlockDiagonalOperator::apply(const SparseVector& y) const {
  std::vector<SparseVector::Entry> contributions;
  auto listed = blocks_.begin();
  for (const SparseVector::Entry& e : y.entries()) {
    const int block = block_index(e.index);
    while (listed != blocks_.end() && listed->block < block) ++listed;
    if (listed == blocks_.end() || listed->block != block) {
      if (tail_ == TailPolicy::kIdentity) contributions.push_back(e);
      continue;
    }
    auto first = std::lower_bound(
        listed->entries.begin(), listed->entries.end(), e.index,
        [](const BlockMatrixEntry& m, std::uint32_t col) { return m.col < col; });
    for (; first != listed->entries.end() && first->col == e.index; ++first)
      contributions.push_back({first->row, first->value * e.value});
  }
  return SparseVector(std::move(contributions));
}

BlockDiagonalOperator summation_diagonal(int max_block) {
  if (max_block < 1) throw std::domain_error("need at least one block");
  std::vector<BlockOperator> blocks;
  blocks.reserve(max_block);
  for (int n = 1; n <= max_block; ++n) blocks.push_back(summation_block(n));
  return BlockDiagonalOperator(std::move(blocks), TailPolicy::kZero);
}

Rational operator_norm_lower_bound(
    const std::function<SparseVector(const SparseVector&)>& op,
    const std::vector<SparseVector>& witnesses, unsigned p) {
  if (witnesses.empty()) throw std::invalid_argument("need at least one witness");
  Rational best(0);
  for (const SparseVector& w : witnesses) {
    if (w.is_zero()) throw std::invalid_argument("witnesses must be nonzero");
    const Rational denominator = baernstein_norm(w, p).p_power;
    const Rational numerator = baernstein_norm(op(w), p).p_power;
    Rational ratio = numerator / denominator;
    if (ratio > best) best = std::move(ratio);
  }
  return best;
}

bool mu_domination_holds(const std::vector<SparseVector>& xs, const SparseVector& y,
                         const IndexSet& n) {
  const SparseVector image = embed_block_tuple(xs).apply(y);
  return abs_sum(image, n) <= abs_sum(y, upper_endpoints(n));
}

}  // namespace snorm
